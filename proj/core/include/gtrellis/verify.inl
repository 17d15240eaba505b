#include <random>

namespace gtrellis {

template <typename Rng>
PathSegment random_path(TrellisSection const &section, std::size_t length,
                        Rng &rng)
{
  PathSegment path;
  if (length == 0)
    return path;
  std::uniform_int_distribution<Element> first(0, section.b().order() - 1);
  path.branches.push_back(first(rng));
  while (path.size() < length) {
    auto const &options = section.branches_from(section.right(path.branches.back()));
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    path.branches.push_back(options[pick(rng)]);
  }
  return path;
}

} // namespace gtrellis
