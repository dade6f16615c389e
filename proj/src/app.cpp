#include "projspec/app.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "projspec/dynamics.hpp"
#include "projspec/errors.hpp"
#include "projspec/groups.hpp"
#include "projspec/jointspec.hpp"
#include "projspec/matrix_io.hpp"
#include "projspec/render.hpp"
#include "projspec/verify.hpp"

namespace projspec {
namespace fs = std::filesystem;

namespace {

// Raised when a computed quantity breaks a configured tolerance; the
// outputs are still written.
struct Breach {
  std::string what;
};

struct Outcome {
  std::vector<std::string> outputs;
  std::vector<Breach> breaches;
};

std::string complex_cells(Complex c) {
  return format_double(c.real()) + "," + format_double(c.imag());
}

std::string complex_cells(WideComplex c) {
  return complex_cells(Complex(static_cast<double>(c.real()), static_cast<double>(c.imag())));
}

std::string coordinate_header(const char* prefix, std::size_t count) {
  std::string h;
  for (std::size_t i = 0; i < count; ++i) {
    h += std::string(prefix) + std::to_string(i) + "_re," + prefix + std::to_string(i) + "_im,";
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ChartSlice slice_for(const JobConfig& job, std::size_t coords) {
  ChartSlice s = job.slice;
  if (s.offsets.size() != coords) {
    const bool zero = std::all_of(s.offsets.begin(), s.offsets.end(),
                                  [](const Complex& c) { return c == Complex(0); });
    if (!zero) {
      throw InvalidInput("slice.offsets has " + std::to_string(s.offsets.size()) +
                         " entries, expected " + std::to_string(coords));
    }
    s.offsets.assign(coords, 0);
  }
  s.validate();
  return s;
}

Outcome run_spectrum(const JobConfig& job, const fs::path& dir, std::ostream& out) {
  const MatrixFile mf = read_matrix_file(job.input);
  const MatrixPencil pencil = mf.kind == MatrixFile::Kind::pencil
                                  ? MatrixPencil(mf.matrices)
                                  : MatrixTuple(mf.matrices, false).pencil();
  const std::size_t coords = pencil.parameters() + 1;
  const ChartSlice s = slice_for(job, coords);
  const auto pts = make_slice(s);

  std::string csv = coordinate_header("z", coords) + "sigma_ratio,member\n";
  std::size_t members = 0;
  for (const auto& p : pts) {
    const Eigen::VectorXd sv = singular_values(evaluate(pencil, p));
    const double ratio = sv(sv.size() - 1) / std::max(1.0, sv(0));
    const bool member = ratio <= job.tol.singular;
    members += member;
    for (const auto& c : p.coords()) csv += complex_cells(c) + ",";
    csv += format_double(ratio) + "," + (member ? "1" : "0") + "\n";
  }
  write_file(dir / job.csv_name(), csv);
  out << "spectrum: " << members << " of " << pts.size() << " grid points lie in p(A)\n";
  return {{job.csv_name()}, {}};
}

Outcome run_koszul(const JobConfig& job, const fs::path& dir, std::ostream& out) {
  const MatrixFile mf = read_matrix_file(job.input);
  if (mf.kind != MatrixFile::Kind::tuple) throw InvalidInput("koszul needs a tuple matrix file");
  const MatrixTuple t(mf.matrices);
  Outcome o;
  std::string csv = coordinate_header("l", t.size()) + "taylor,harte,approx_point\n";
  for (const auto& l : job.lambdas) {
    if (l.size() != t.size()) {
      throw DimensionError("lambda has " + std::to_string(l.size()) + " entries, tuple has " +
                           std::to_string(t.size()));
    }
    const bool pi = approx_point_membership(t, l, job.tol.rank);
    const bool h = harte_membership(t, l, job.tol.rank);
    for (const auto& c : l) csv += complex_cells(c) + ",";
    if (t.commutes()) {
      const bool tay = taylor_membership(t, l, job.tol.rank);
      csv += tay ? "1," : "0,";
      if ((pi && !h) || (h && !tay)) o.breaches.push_back({"inclusion fails at a lambda"});
    } else {
      csv += "na,";
      if (pi && !h) o.breaches.push_back({"inclusion fails at a lambda"});
    }
    csv += std::string(h ? "1" : "0") + "," + (pi ? "1" : "0") + "\n";
  }
  write_file(dir / job.csv_name(), csv);
  o.outputs.push_back(job.csv_name());
  out << "koszul: " << job.lambdas.size() << " points, tuple "
      << (t.commutes() ? "commutes" : "does not commute (Taylor test skipped)") << "\n";
  return o;
}

Word parse_relator(const std::string& text, const std::vector<std::string>& gens) {
  Word w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const auto it = std::find(gens.begin(), gens.end(), std::string(1, lower));
    if (it == gens.end()) throw InvalidInput(std::string("relator uses unknown generator '") + ch + "'");
    const int g = static_cast<int>(it - gens.begin()) + 1;
    w.push_back(ch == lower ? g : -g);
  }
  if (w.empty()) throw InvalidInput("empty relator");
  return w;
}

GroupRep build_group(const JobConfig& job) {
  const GroupSpec& g = job.group;
  if (g.kind == "cyclic") return regular_rep(cyclic_cayley(g.order));
  if (g.kind == "dihedral") return regular_rep(dihedral_cayley(g.order));
  if (g.kind == "s3") {
    return regular_rep(cayley_from_presentation({"s", "r"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}));
  }
  if (g.kind == "koopman") return koopman_truncation(g.level);
  if (g.kind == "gl3") {
    if (g.rep != "plus" && g.rep != "minus") throw InvalidInput("group.rep must be plus or minus");
    auto reps = gl3_reps();
    return g.rep == "plus" ? reps.first : reps.second;
  }
  if (g.kind == "presentation") {
    if (g.generators.empty()) throw InvalidInput("presentation needs generators");
    for (const auto& name : g.generators) {
      if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0]))) {
        throw InvalidInput("presentation generators must be single lowercase letters");
      }
    }
    std::vector<Word> rels;
    for (const auto& r : g.relators) rels.push_back(parse_relator(r, g.generators));
    return regular_rep(cayley_from_presentation(g.generators, rels));
  }
  if (g.kind == "file") {
    const MatrixFile mf = read_matrix_file(job.input);
    if (mf.kind != MatrixFile::Kind::tuple) throw InvalidInput("group file must be a tuple");
    GroupRep rep;
    rep.generators = mf.matrices;
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
      rep.labels.push_back("g" + std::to_string(i + 1));
    }
    return rep;
  }
  throw InvalidInput("unknown group kind \"" + g.kind + "\"");
}

Outcome run_group(const JobConfig& job, const fs::path& dir, std::ostream& out) {
  const GroupRep rep = build_group(job);
  rep.verify();
  const ComplexMatrix m = markov_operator(rep);
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  std::vector<Complex> eig(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(eig.begin(), eig.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  double radius = 0;
  for (const auto& e : eig) radius = std::max(radius, std::abs(e));
  const H0Result h0 = h0_containment_test(rep, job.seed, job.samples);
  const std::size_t vars = rep.generators.size() + 1;

  std::ostringstream report;
  report << "group: " << job.group.kind << ", dimension " << rep.dim() << ", "
         << rep.generators.size() << " generators\n";
  report << "markov norm: " << format_double(operator_norm(m)) << "\n";
  report << "markov spectral radius: " << format_double(radius) << "\n";
  report << "h0 contained: " << (h0.contained ? "true" : "false")
         << (h0.exact ? " (exact divisibility)" : " (" + std::to_string(h0.samples) + " samples)")
         << "\n";
  if (rep.dim() <= kMaxSymbolicDim && vars <= kMaxVariables) {
    report << "char poly: " << char_poly(group_pencil(rep)).to_string(12) << "\n";
  } else {
    report << "char poly: skipped (dimension above " << kMaxSymbolicDim << ")\n";
  }

  std::string csv = "index,re,im,modulus\n";
  for (std::size_t k = 0; k < eig.size(); ++k) {
    csv += std::to_string(k) + "," + complex_cells(eig[k]) + "," + format_double(std::abs(eig[k])) + "\n";
  }
  write_file(dir / job.csv_name(), csv);
  write_file(dir / "group.txt", report.str());
  out << report.str();
  return {{job.csv_name(), "group.txt"}, {}};
}

Outcome run_julia(const JobConfig& job, const fs::path& dir, std::ostream& out, unsigned threads) {
  const ChartSlice s = slice_for(job, 3);
  const auto pts = make_slice(s);
  const EscapeField f = escape_field(pts, s.width, s.height, {job.maxiter, job.radius}, threads);
  std::vector<double> values(f.counts.begin(), f.counts.end());
  write_csv(pts, values, dir / job.csv_name());
  write_image(f, dir / job.image_name());
  const auto bounded = std::count(f.counts.begin(), f.counts.end(), kBounded);
  out << "julia: " << bounded << " of " << pts.size() << " pixels bounded after " << job.maxiter
      << " steps\n";
  return {{job.csv_name(), job.image_name()}, {}};
}

Outcome run_iterate(const JobConfig& job, const fs::path& dir, std::ostream& out) {
  const ProjPoint start = parse_point(job.point);
  if (start.size() != 3) throw DimensionError("iterate needs a point of P^2");
  const bool renorm = job.map == "renormalization";
  const ExtendedComplex t0 = tau(start);
  const bool closed_ok = renorm && !t0.is_infinite() && !in_julia_interval(t0);
  Outcome o;
  std::string csv = "step," + coordinate_header("z", 3) + "tau_re,tau_im,closed_distance\n";
  ProjPoint z = start.canonical();
  for (int k = 0; k <= job.steps; ++k) {
    if (k > 0) {
      try {
        z = renorm ? renormalization_map(z) : cubic_map(z);
      } catch (const DomainError&) {
        throw DomainError("orbit reaches the indeterminacy set at step " + std::to_string(k));
      }
    }
    const ProjPoint shown = display_form(z);
    const ExtendedComplex t = tau(z);
    csv += std::to_string(k) + ",";
    for (const auto& c : shown.coords()) csv += complex_cells(c) + ",";
    csv += t.is_infinite() ? "inf,inf," : complex_cells(t.value()) + ",";
    std::string dist = "na";
    if (closed_ok) {
      const long double d = iterate_closed(start, k).distance(z);
      dist = format_double(static_cast<double>(d));
      if (d > job.tol.agreement) {
        o.breaches.push_back({"closed form differs from direct iteration at step " +
                              std::to_string(k) + " by " + dist});
      }
    }
    csv += dist + "\n";
    out << "step " << k << ": " << shown.to_string(10) << "\n";
  }
  write_file(dir / job.csv_name(), csv);
  o.outputs.push_back(job.csv_name());
  return o;
}

Outcome run_verify(const JobConfig& job, const fs::path& dir, std::ostream& out, unsigned threads) {
  const auto results = run_invariant_suite({job.seed, job.verify_points, threads});
  write_file(dir / job.csv_name(), format_suite_csv(results));
  Outcome o{{job.csv_name()}, {}};
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << format_double(r.measured)
        << " tol=" << format_double(r.tolerance) << "\n";
    if (!r.passed) o.breaches.push_back({r.name});
  }
  return o;
}

std::string manifest(const JobConfig& job, const Outcome& o, int code) {
  std::string m = std::string("projspec ") + kVersion + "\n";
  m += "command: " + to_string(job.command) + "\n";
  m += "exit: " + std::to_string(code) + "\n";
  if (!job.input.empty()) {
    m += "input: " + job.input + " fnv1a64=" + fnv1a_hex(slurp(job.input)) + "\n";
  }
  m += "outputs:\n";
  for (const auto& f : o.outputs) m += "  " + f + "\n";
  for (const auto& b : o.breaches) m += "breach: " + b.what + "\n";
  m += "config:\n" + job.to_json() + "\n";
  m += "defaults:\n" + format_defaults();
  return m;
}

}  // namespace

ProjPoint display_form(const ProjPoint& p) {
  long double max = 0;
  for (const auto& c : p.coords()) max = std::max(max, std::abs(c));
  std::size_t last = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p[i]) > 1e-12L * max) last = i;
  }
  std::vector<WideComplex> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    c[i] = std::abs(p[i]) <= 1e-15L * max ? WideComplex(0) : p[i] / p[last];
  }
  c[last] = 1;
  return ProjPoint(std::move(c));
}

int run(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const fs::path dir(job.output_dir);
  const unsigned threads = job.threads;
  Outcome o;
  int code = kExitOk;
  try {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    switch (job.command) {
      case Command::spectrum: o = run_spectrum(job, dir, out); break;
      case Command::koszul: o = run_koszul(job, dir, out); break;
      case Command::group: o = run_group(job, dir, out); break;
      case Command::julia: o = run_julia(job, dir, out, threads); break;
      case Command::iterate: o = run_iterate(job, dir, out); break;
      case Command::verify: o = run_verify(job, dir, out, threads); break;
    }
    for (const auto& b : o.breaches) err << "tolerance breach: " << b.what << "\n";
    if (!o.breaches.empty()) code = kExitNumerical;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    code = kExitNumerical;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    code = kExitInvalid;
  }
  try {
    write_file(dir / "manifest.txt", manifest(job, o, code));
  } catch (const Error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return code;
}

}  // namespace projspec
