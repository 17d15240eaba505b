#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gtrellis/group.hpp"
#include "gtrellis/subgroup.hpp"

namespace gtrellis {

/// Orders above this are rejected by the isomorphism search.
constexpr std::size_t isomorphism_order_cap = 64;

/// Calls `visit(phi)` for every isomorphism g -> h, where phi[x] is the image
/// of x, until `visit` returns false. Throws TooLarge above the cap.
void for_each_isomorphism(FiniteGroup const &g, FiniteGroup const &h,
                          std::function<bool(std::vector<Element> const &)> const
                              &visit);

std::optional<std::vector<Element>> find_isomorphism(FiniteGroup const &g,
                                                     FiniteGroup const &h);

/// Cheap invariants that every isomorphism preserves: order, element order
/// counts and commutativity.
bool same_order_profile(FiniteGroup const &g, FiniteGroup const &h);

/// An explicit isomorphism between two quotients, checked exhaustively.
struct VerifiedIsomorphism
{
  Quotient domain;
  Quotient codomain;
  /// Domain coset index to codomain coset index.
  std::vector<std::size_t> map;
};

/// Image of one domain coset under the map being verified.
using CosetImage = std::function<ElementSet(ElementSet const &coset)>;

/// Materializes dom_amb/dom_norm and cod_amb/cod_norm, applies `image` to
/// every domain coset and checks that the result names a single codomain
/// coset (exactly that coset when `exact_image` is set), that the induced map
/// is a bijection and a homomorphism. Throws VerificationFailed with a
/// witness otherwise.
VerifiedIsomorphism verify_quotient_map(Subgroup const &dom_amb,
                                        Subgroup const &dom_norm,
                                        Subgroup const &cod_amb,
                                        Subgroup const &cod_norm,
                                        CosetImage const &image,
                                        bool exact_image);

} // namespace gtrellis
