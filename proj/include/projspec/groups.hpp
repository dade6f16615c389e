#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projspec/numeric.hpp"
#include "projspec/pencil.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

/// A word in the generators: letter +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

/// Multiplication table of a finite group.
struct CayleyTable {
  std::size_t order = 0;
  /// table[i][j] = index of element_i * element_j
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> generators;
  std::vector<std::string> labels;
  std::size_t identity = 0;

  /// Throws InvalidInput unless the table is a Latin square with a two-sided
  /// identity and the generators generate every element.
  void validate() const;
};

/// Enumerates the cosets of the trivial subgroup of <gens | relators>
/// (Hasse-Lunde-Todd-Coxeter), yielding the Cayley table. Cosets are
/// renumbered in breadth-first order so the result is deterministic.
CayleyTable cayley_from_presentation(std::vector<std::string> labels,
                                     const std::vector<Word>& relators,
                                     std::size_t max_cosets = 100000);

/// <a, t | a^2 = t^2 = (at)^N = 1>, order 2N.
CayleyTable dihedral_cayley(std::size_t n);
/// <g | g^N = 1>
CayleyTable cyclic_cayley(std::size_t n);

/// Unitary matrices for the generators of a group.
struct GroupRep {
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> generators;
  /// Relators expected to evaluate to the identity.
  std::vector<Word> relations;
  std::optional<CayleyTable> table;

  std::size_t dim() const;
  /// Throws NumericalError unless every generator is unitary within 1e-10
  /// and every relation holds within 1e-8.
  void verify() const;
};

ComplexMatrix evaluate_word(const GroupRep& rep, const Word& w);

/// Left regular representation: lambda(g) e_h = e_{gh}.
GroupRep regular_rep(const CayleyTable& c);

inline constexpr int kMaxKoopmanLevel = 12;

/// Level-L truncation of the Koopman representation of D_infinity on the
/// binary tree: a swaps the two halves, t acts as diag(a_{L-1}, t_{L-1}).
/// Level 0 is the 1x1 trivial representation. Dimension 2^L.
GroupRep koopman_truncation(int level);

/// (1/n) sum_i pi(g_i).
ComplexMatrix markov_operator(const GroupRep& rep);

/// The pencil (I, pi(g_1), ..., pi(g_n)).
MatrixPencil group_pencil(const GroupRep& rep);

struct H0Result {
  bool contained = false;
  /// True when decided by exact divisibility, false in sampling mode.
  bool exact = false;
  std::size_t samples = 0;
};

/// Is the hyperplane z_0 + ... + z_n = 0 inside the projective spectrum of
/// the group pencil? Exact divisibility of the characteristic polynomial
/// when the dimension allows it, otherwise singularity at `samples` random
/// points of the hyperplane.
H0Result h0_containment_test(const GroupRep& rep, std::uint64_t seed = 1729,
                             std::size_t samples = 50);

/// z lies in every region 2|z_j|^2 <= ||z||^2, j = 0..n (the projective
/// spectrum of the free group's regular representation). `generators` must
/// equal z.size() - 1.
bool free_group_region(const ProjPoint& z, std::size_t generators);

/// The two inequivalent 2-dimensional unitary representations rho_+ and
/// rho_- of GL_3(Z/3Z) on generators g1, g2, g3; relations checked on build.
std::pair<GroupRep, GroupRep> gl3_reps();

}  // namespace projspec
