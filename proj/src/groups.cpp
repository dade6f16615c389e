#include "projspec/groups.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "projspec/errors.hpp"

namespace projspec {

void CayleyTable::validate() const {
  if (order == 0 || table.size() != order) throw InvalidInput("Cayley table has wrong size");
  if (identity >= order) throw InvalidInput("Cayley table identity index out of range");
  for (std::size_t i = 0; i < order; ++i) {
    if (table[i].size() != order) throw InvalidInput("Cayley table row has wrong length");
    std::vector<bool> row_seen(order), col_seen(order);
    for (std::size_t j = 0; j < order; ++j) {
      if (table[i][j] >= order || table[j][i] >= order) {
        throw InvalidInput("Cayley table entry out of range");
      }
      if (row_seen[table[i][j]] || col_seen[table[j][i]]) {
        throw InvalidInput("Cayley table is not a Latin square");
      }
      row_seen[table[i][j]] = col_seen[table[j][i]] = true;
    }
    if (table[identity][i] != i || table[i][identity] != i) {
      throw InvalidInput("Cayley table identity is not two-sided");
    }
  }
  if (generators.empty()) throw InvalidInput("Cayley table needs at least one generator");
  std::vector<bool> reached(order);
  std::vector<std::size_t> frontier{identity};
  reached[identity] = true;
  while (!frontier.empty()) {
    const std::size_t h = frontier.back();
    frontier.pop_back();
    for (std::size_t g : generators) {
      if (g >= order) throw InvalidInput("Cayley table generator index out of range");
      const std::size_t gh = table[g][h];
      if (!reached[gh]) {
        reached[gh] = true;
        frontier.push_back(gh);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw InvalidInput("Cayley table generators do not generate the group");
  }
}

CayleyTable dihedral_cayley(std::size_t n) {
  if (n == 0) throw InvalidInput("dihedral_cayley: N must be positive");
  Word at_power;
  for (std::size_t k = 0; k < n; ++k) {
    at_power.push_back(1);
    at_power.push_back(2);
  }
  return cayley_from_presentation({"a", "t"}, {{1, 1}, {2, 2}, at_power});
}

CayleyTable cyclic_cayley(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic_cayley: N must be positive");
  return cayley_from_presentation({"g"}, {Word(n, 1)});
}

std::size_t GroupRep::dim() const {
  return generators.empty() ? 0 : static_cast<std::size_t>(generators.front().rows());
}

ComplexMatrix evaluate_word(const GroupRep& rep, const Word& w) {
  const auto d = static_cast<Eigen::Index>(rep.dim());
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  for (int letter : w) {
    const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
    if (letter == 0 || g >= rep.generators.size()) throw InvalidInput("word uses unknown generator");
    // unitary, so the inverse is the adjoint
    m = letter > 0 ? ComplexMatrix(m * rep.generators[g])
                   : ComplexMatrix(m * rep.generators[g].adjoint());
  }
  return m;
}

void GroupRep::verify() const {
  if (generators.empty()) throw InvalidInput("representation has no generators");
  if (labels.size() != generators.size()) throw InvalidInput("one label per generator required");
  const auto d = static_cast<Eigen::Index>(dim());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.rows() != d || g.cols() != d) throw DimensionError("generator matrices differ in size");
    const double err = (g.adjoint() * g - id).cwiseAbs().maxCoeff();
    if (err > 1e-10) {
      throw NumericalError("generator " + labels[i] + " is not unitary (error " +
                           std::to_string(err) + ")");
    }
  }
  for (const auto& w : relations) {
    const double err = (evaluate_word(*this, w) - id).cwiseAbs().maxCoeff();
    if (err > 1e-8) {
      throw NumericalError("relation violated by " + std::to_string(err));
    }
  }
}

GroupRep regular_rep(const CayleyTable& c) {
  c.validate();
  GroupRep rep;
  rep.labels = c.labels;
  const auto m = static_cast<Eigen::Index>(c.order);
  for (std::size_t g : c.generators) {
    ComplexMatrix p = ComplexMatrix::Zero(m, m);
    for (std::size_t h = 0; h < c.order; ++h) p(c.table[g][h], h) = 1.0;
    rep.generators.push_back(std::move(p));
  }
  rep.table = c;
  return rep;
}

GroupRep koopman_truncation(int level) {
  if (level < 0) throw InvalidInput("koopman_truncation: level must be >= 0");
  if (level > kMaxKoopmanLevel) {
    throw InvalidInput("koopman_truncation: level " + std::to_string(level) +
                       " exceeds the maximum " + std::to_string(kMaxKoopmanLevel));
  }
  ComplexMatrix a = ComplexMatrix::Ones(1, 1);
  ComplexMatrix t = ComplexMatrix::Ones(1, 1);
  for (int l = 1; l <= level; ++l) {
    const auto h = a.rows();
    ComplexMatrix next_a = ComplexMatrix::Zero(2 * h, 2 * h);
    next_a.topRightCorner(h, h).setIdentity();
    next_a.bottomLeftCorner(h, h).setIdentity();
    ComplexMatrix next_t = ComplexMatrix::Zero(2 * h, 2 * h);
    next_t.topLeftCorner(h, h) = a;
    next_t.bottomRightCorner(h, h) = t;
    a = std::move(next_a);
    t = std::move(next_t);
  }
  GroupRep rep;
  rep.labels = {"a", "t"};
  rep.generators = {std::move(a), std::move(t)};
  rep.relations = {{1, 1}, {2, 2}};
  return rep;
}

ComplexMatrix markov_operator(const GroupRep& rep) {
  if (rep.generators.empty()) throw InvalidInput("markov_operator: no generators");
  ComplexMatrix m = ComplexMatrix::Zero(rep.dim(), rep.dim());
  for (const auto& g : rep.generators) m += g;
  return m / static_cast<double>(rep.generators.size());
}

MatrixPencil group_pencil(const GroupRep& rep) {
  std::vector<ComplexMatrix> mats{ComplexMatrix::Identity(rep.dim(), rep.dim())};
  mats.insert(mats.end(), rep.generators.begin(), rep.generators.end());
  return MatrixPencil(std::move(mats));
}

H0Result h0_containment_test(const GroupRep& rep, std::uint64_t seed, std::size_t samples) {
  const MatrixPencil pencil = group_pencil(rep);
  const std::size_t vars = pencil.matrices().size();
  H0Result r;
  if (rep.dim() <= kMaxSymbolicDim && vars <= kMaxVariables) {
    r.exact = true;
    r.contained = hyperplane_contained(char_poly(pencil),
                                       LinearForm(std::vector<Complex>(vars, 1.0)));
    return r;
  }

  // Random points of H_0. A polynomial vanishing on the real points of a
  // real hyperplane vanishes on all of it, so real generators get real
  // samples (and the cheaper real SVD).
  const bool real = std::all_of(rep.generators.begin(), rep.generators.end(),
                                [](const ComplexMatrix& g) { return is_real(g); });
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  r.contained = true;
  for (std::size_t s = 0; s < samples && r.contained; ++s) {
    std::vector<WideComplex> z(vars);
    WideComplex sum = 0;
    for (std::size_t i = 1; i < vars; ++i) {
      const double re = normal(rng);
      const double im = real ? 0.0 : normal(rng);
      z[i] = WideComplex(re, im);
      sum += z[i];
    }
    z[0] = -sum;
    r.contained = spectrum_membership(pencil, ProjPoint(std::move(z)));
    ++r.samples;
  }
  return r;
}

bool free_group_region(const ProjPoint& z, std::size_t generators) {
  if (z.size() != generators + 1) {
    throw DimensionError("free_group_region: expected " + std::to_string(generators + 1) +
                         " coordinates");
  }
  long double total = 0;
  for (const auto& c : z.coords()) total += std::norm(c);
  const long double slack = 1e-12L * total;
  return std::all_of(z.coords().begin(), z.coords().end(),
                     [&](const WideComplex& c) { return 2 * std::norm(c) <= total + slack; });
}

std::pair<GroupRep, GroupRep> gl3_reps() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  ComplexMatrix a1(2, 2), a2(2, 2), a3(2, 2);
  a1 << -s, -0.5 - 0.5 * i, -0.5 + 0.5 * i, s;
  a2 << 0.5 + 0.5 * i, s, -s, 0.5 - 0.5 * i;
  a3 << 0.5 - 0.5 * i, i * s, i * s, 0.5 + 0.5 * i;

  // g1^2, (g1 g2^-1)^2, (g1 g3^-1)^2, g2^2 g3 g2^-1 g3, g2 g3^2 g2 g3^-1
  const std::vector<Word> relations{
      {1, 1}, {1, -2, 1, -2}, {1, -3, 1, -3}, {2, 2, 3, -2, 3}, {2, 3, 3, 2, -3}};

  auto make = [&](double sign) {
    GroupRep rep;
    rep.labels = {"g1", "g2", "g3"};
    rep.generators = {sign * a1, a2, a3};
    rep.relations = relations;
    rep.verify();
    return rep;
  };
  return {make(1.0), make(-1.0)};
}

}  // namespace projspec
