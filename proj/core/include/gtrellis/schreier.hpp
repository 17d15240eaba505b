#pragma once

#include <vector>

#include "gtrellis/isomorphism.hpp"
#include "gtrellis/subgroup.hpp"
#include "gtrellis/trellis.hpp"

namespace gtrellis {

/// X_(j-1)(X_j ∩ Y_k) for any integers j, k.
Subgroup schreier_term(ChainPair const &c, int j, int k);

/// Y_(k-1)(Y_k ∩ X_j).
Subgroup dual_schreier_term(ChainPair const &c, int k, int j);

/// Entries A_(j-1)(A_j ∩ B_k) for 0 <= j <= ell and -1 <= k <= ell. For the
/// primal matrix A = X and B = Y; the dual swaps them.
struct SchreierMatrixForm
{
  int ell = 0;
  bool dual = false;
  bool controllable = false;
  /// entries[j][k + 1]
  std::vector<std::vector<Subgroup>> entries;

  Subgroup const &entry(int j, int k) const
  {
    return entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + 1)];
  }
};

SchreierMatrixForm schreier_matrix(ChainPair const &c);
SchreierMatrixForm schreier_matrix(TrellisSection const &section);

SchreierMatrixForm dual_matrix(ChainPair const &c);
SchreierMatrixForm dual_matrix(TrellisSection const &section);

/// The matrix with column j shifted so that row r holds
/// X_(j-1)(X_j ∩ Y_(r-j)), 0 <= r <= ell.
struct TriangularForm
{
  int ell = 0;
  /// columns[j][r]
  std::vector<std::vector<Subgroup>> columns;
};

/// Throws NotControllableMatrix unless the diagonal test passed.
TriangularForm controllable_form(SchreierMatrixForm const &smf);

/// X_(j-1)(X_j∩Y_k)/X_(j-1)(X_j∩Y_(k-1)) onto
/// Y_(k-1)(Y_k∩X_j)/Y_(k-1)(Y_k∩X_(j-1)) by writing g = u u* with
/// u in X_(j-1), u* in X_j∩Y_k and sending g to the coset of u*.
VerifiedIsomorphism zassenhaus_iso(TrellisSection const &section,
                                   ChainPair const &c, int j, int k);

/// X*_(j-1) = X_(j-1)(X_j ∩ Y_0).
Subgroup star_term(ChainPair const &c, int j);

/// 1, X*_-1, X_0, X*_0, ..., X_(ell-1), X*_(ell-1). Checks X*_(ell-1) = B.
Chain star_chain(ChainPair const &c);

/// X_j/X*_(j-1) onto X_(j+1)/X_j by sending a coset to its next set.
VerifiedIsomorphism column_shift_iso(TrellisSection const &section,
                                     ChainPair const &c, int j);

/// X_(j-1)(X_j∩Y_k)/X_(j-1)(X_j∩Y_(k-m)) onto
/// X_j(X_(j+1)∩Y_(k-1))/X_j(X_(j+1)∩Y_(k-m-1)) by next set.
VerifiedIsomorphism adjacent_column_iso(TrellisSection const &section,
                                        ChainPair const &c, int j, int k,
                                        int m);

/// H_0 = X_0∩Y_k over J_0 = X_0∩Y_(k-m), pushed forward l times by N.
struct RectangleFamily
{
  int k = 0;
  int m = 0;
  int l = 0;
  std::vector<Subgroup> h;
  std::vector<Subgroup> j;
  /// (X_i∩Y_(k-i-m))(X_(i-1)∩Y_(k-i))
  std::vector<Subgroup> d;
  /// H_0/J_0 onto H_i/J_i by N^i.
  std::vector<VerifiedIsomorphism> maps;
  /// (X_i∩Y_(k-i))/D_i onto H_i/J_i by D_i x -> J_i x.
  std::vector<VerifiedIsomorphism> correspondences;
  /// Transversal of H_i/J_i drawn from X_i∩Y_(k-i).
  std::vector<std::vector<Element>> transversals;
};

/// Throws IndexOutOfRange unless 0 < k <= ell, 1 <= m <= k and
/// 0 < l <= k - m + 1.
RectangleFamily rectangle_family(TrellisSection const &section,
                                 ChainPair const &c, int k, int m, int l);

} // namespace gtrellis
