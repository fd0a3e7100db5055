#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covariant/group.hpp"

namespace covariant {

/// Builtin families. Element orderings are canonical so that test vectors
/// are reproducible:
///  - cyclic n:     k <-> k (additive), labels "0".."n-1".
///  - dihedral n:   order 2n; index e*n + k <-> r^k s^e, with s r s = r^-1.
///  - symmetric n:  permutations of {0..n-1} in lexicographic order of their
///                  one-line form; (p*q)(i) = p(q(i)); cycle labels 1-based.
///  - quaternion8:  1, -1, i, -i, j, -j, k, -k.
///  - heisenberg p: unitriangular 3x3 over Z/p, index a*p^2 + b*p + c for
///                  [[1,a,c],[0,1,b],[0,0,1]]; centre is {(0,0,c)}.
///  - A x B:        index i*|B| + j.
enum class GroupFamily { cyclic, dihedral, symmetric, quaternion8, heisenberg };

/// Throws ParameterOutOfRange.
FiniteGroup builtin_group(GroupFamily family, unsigned parameter);
/// Family by name ("cyclic", "dihedral", "symmetric", "quaternion8",
/// "heisenberg_mod"). Throws UnknownFamily.
FiniteGroup builtin_group(std::string_view family, unsigned parameter);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Short selectors: Z<n> (or C<n>), D<n>, S<n>, Q8, H<p>, "trivial", and
/// products joined by 'x' such as "Z2xZ2". Long form "<family>:<n>" is also
/// accepted. Throws UnknownFamily / ParameterOutOfRange.
FiniteGroup parse_group_selector(std::string_view selector);

/// One line per family, for `covariant groups`.
std::vector<std::string> builtin_catalogue();

/// The fixed zoo used by the acceptance criteria and `covariant report`.
std::vector<std::string> standard_zoo();

}  // namespace covariant
