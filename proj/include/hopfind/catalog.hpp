#ifndef HOPFIND_CATALOG_HPP
#define HOPFIND_CATALOG_HPP

#include <string>
#include <vector>

#include "hopfind/instance_io.hpp"

namespace hopfind {

/// Built-in instances in a fixed order. Hopf algebras are named by their
/// usual symbols (kC2, kS3, H4, T3, kC2*, ...), embeddings B ≤ A as "A/B"
/// and the general morphism as "kS3->kC4".
std::vector<std::string> catalogNames();

/// Self-contained instance file; throws InputError for unknown names.
InstanceFile catalogInstance(const std::string& name);

}  // namespace hopfind

#endif  // HOPFIND_CATALOG_HPP
