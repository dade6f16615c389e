#include "projspec/config.hpp"

#include <cmath>
#include <set>

#include "json.hpp"
#include "projspec/errors.hpp"
#include "projspec/jointspec.hpp"

namespace projspec {
namespace {

using nlohmann::json;

constexpr const char* kCommands[] = {"spectrum", "koszul", "group", "julia", "iterate", "verify"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + " must be an object");
  std::string unknown;
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) unknown += (unknown.empty() ? "" : ", ") + key;
  }
  if (!unknown.empty()) throw InvalidInput("unknown key(s) in " + where + ": " + unknown);
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string("config key \"") + key + "\" has the wrong type");
  }
}

// Accepts 1.5, "1+2i" or [1, 2].
Complex read_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0};
  if (v.is_string()) {
    const WideComplex c = parse_complex(v.get<std::string>());
    return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw InvalidInput("expected a complex number (number, string or [re, im])");
}

std::vector<Complex> read_complex_list(const json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be a list");
  std::vector<Complex> out;
  for (const auto& e : v) out.push_back(read_complex(e));
  return out;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Part parse_part(const std::string& s) {
  if (s == "re") return Part::re;
  if (s == "im") return Part::im;
  throw InvalidInput("axis part must be \"re\" or \"im\", got \"" + s + "\"");
}

void read_axis(const json& obj, SliceAxis& a, const std::string& where) {
  reject_unknown(obj, {"coord", "part", "min", "max"}, where);
  read(obj, "coord", a.coord);
  if (obj.contains("part")) {
    std::string p;
    read(obj, "part", p);
    a.part = parse_part(p);
  }
  read(obj, "min", a.min);
  read(obj, "max", a.max);
}

json axis_json(const SliceAxis& a) {
  return {{"coord", a.coord}, {"part", a.part == Part::re ? "re" : "im"}, {"min", a.min},
          {"max", a.max}};
}

void require_positive(double v, const char* name) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw InvalidInput(std::string(name) + " must be a positive finite number");
  }
}

void validate(const JobConfig& c) {
  require_positive(c.tol.singular, "tolerances.singular");
  require_positive(c.tol.rank, "tolerances.rank");
  require_positive(c.tol.agreement, "tolerances.agreement");
  require_positive(c.tol.degenerate, "tolerances.degenerate");
  if (c.maxiter < 1) throw InvalidInput("maxiter must be at least 1");
  if (!(c.radius > 1) || !std::isfinite(c.radius)) throw InvalidInput("radius must exceed 1");
  if (c.steps < 0) throw InvalidInput("steps must be non-negative");
  if (c.samples < 1) throw InvalidInput("samples must be at least 1");
  if (c.verify_points < 1) throw InvalidInput("verify_points must be at least 1");
  if (c.output_dir.empty()) throw InvalidInput("output_dir must not be empty");
  c.slice.validate();
  if (c.map != "renormalization" && c.map != "cubic") {
    throw InvalidInput("map must be \"renormalization\" or \"cubic\"");
  }
  if (c.group.level < 0 || c.group.level > 12) throw InvalidInput("group.level must be in 0..12");
  if ((c.command == Command::spectrum || c.command == Command::koszul) && c.input.empty()) {
    throw InvalidInput(to_string(c.command) + " needs an \"input\" matrix file");
  }
  if (c.command == Command::koszul && c.lambdas.empty()) {
    throw InvalidInput("koszul needs a non-empty \"lambdas\" list");
  }
  if (c.command == Command::group && c.group.kind == "file" && c.input.empty()) {
    throw InvalidInput("group kind \"file\" needs an \"input\" matrix file");
  }
  parse_point(c.point);
}

}  // namespace

std::string to_string(Command c) { return kCommands[static_cast<int>(c)]; }

Command parse_command(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kCommands[i]) return static_cast<Command>(i);
  }
  throw InvalidInput("unknown command \"" + name + "\"");
}

std::string JobConfig::csv_name() const { return csv.empty() ? to_string(command) + ".csv" : csv; }
std::string JobConfig::image_name() const { return image.empty() ? "julia.ppm" : image; }

JobConfig parse_config(const std::string& text, const std::string& command) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc,
                 {"command", "input", "output_dir", "csv", "image", "seed", "threads", "maxiter",
                  "radius", "tolerances", "slice", "lambdas", "group", "point", "steps", "map",
                  "samples", "verify_points"},
                 "config");
  JobConfig c;
  std::string name = command;
  if (doc.contains("command")) {
    std::string from_file;
    read(doc, "command", from_file);
    if (!name.empty() && name != from_file) {
      throw InvalidInput("config command \"" + from_file + "\" conflicts with \"" + name + "\"");
    }
    name = from_file;
  }
  if (name.empty()) throw InvalidInput("no command given");
  c.command = parse_command(name);

  read(doc, "input", c.input);
  read(doc, "output_dir", c.output_dir);
  read(doc, "csv", c.csv);
  read(doc, "image", c.image);
  read(doc, "seed", c.seed);
  read(doc, "threads", c.threads);
  read(doc, "maxiter", c.maxiter);
  read(doc, "radius", c.radius);
  read(doc, "steps", c.steps);
  read(doc, "map", c.map);
  read(doc, "samples", c.samples);
  read(doc, "verify_points", c.verify_points);
  if (doc.contains("point")) {
    const json& p = doc["point"];
    if (p.is_string()) {
      c.point = p.get<std::string>();
    } else {
      c.point.clear();
      for (const Complex& z : read_complex_list(p, "point")) {
        c.point += (c.point.empty() ? "" : ",") + format_complex(z, 17);
      }
    }
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    reject_unknown(t, {"singular", "rank", "agreement", "degenerate"}, "tolerances");
    read(t, "singular", c.tol.singular);
    read(t, "rank", c.tol.rank);
    read(t, "agreement", c.tol.agreement);
    read(t, "degenerate", c.tol.degenerate);
  }
  if (doc.contains("slice")) {
    const json& s = doc["slice"];
    reject_unknown(s, {"chart", "x", "y", "offsets", "width", "height"}, "slice");
    read(s, "chart", c.slice.chart);
    if (s.contains("x")) read_axis(s["x"], c.slice.x, "slice.x");
    if (s.contains("y")) read_axis(s["y"], c.slice.y, "slice.y");
    if (s.contains("offsets")) c.slice.offsets = read_complex_list(s["offsets"], "slice.offsets");
    read(s, "width", c.slice.width);
    read(s, "height", c.slice.height);
  }
  if (doc.contains("lambdas")) {
    const json& l = doc["lambdas"];
    if (!l.is_array()) throw InvalidInput("lambdas must be a list of points");
    for (const auto& pt : l) c.lambdas.push_back(read_complex_list(pt, "lambdas entry"));
  }
  if (doc.contains("group")) {
    const json& g = doc["group"];
    reject_unknown(g, {"kind", "order", "level", "rep", "generators", "relators"}, "group");
    read(g, "kind", c.group.kind);
    read(g, "order", c.group.order);
    read(g, "level", c.group.level);
    read(g, "rep", c.group.rep);
    read(g, "generators", c.group.generators);
    read(g, "relators", c.group.relators);
  }
  validate(c);
  return c;
}

std::string JobConfig::to_json() const {
  json offsets = json::array();
  for (const Complex& z : slice.offsets) offsets.push_back(complex_json(z));
  json lam = json::array();
  for (const auto& pt : lambdas) {
    json row = json::array();
    for (const Complex& z : pt) row.push_back(complex_json(z));
    lam.push_back(row);
  }
  json doc = {
      {"command", to_string(command)},
      {"input", input},
      {"output_dir", output_dir},
      {"csv", csv_name()},
      {"image", image_name()},
      {"seed", seed},
      {"threads", threads},
      {"maxiter", maxiter},
      {"radius", radius},
      {"tolerances",
       {{"singular", tol.singular},
        {"rank", tol.rank},
        {"agreement", tol.agreement},
        {"degenerate", tol.degenerate}}},
      {"slice",
       {{"chart", slice.chart},
        {"x", axis_json(slice.x)},
        {"y", axis_json(slice.y)},
        {"offsets", offsets},
        {"width", slice.width},
        {"height", slice.height}}},
      {"lambdas", lam},
      {"group",
       {{"kind", group.kind},
        {"order", group.order},
        {"level", group.level},
        {"rep", group.rep},
        {"generators", group.generators},
        {"relators", group.relators}}},
      {"point", point},
      {"steps", steps},
      {"map", map},
      {"samples", samples},
      {"verify_points", verify_points},
  };
  return doc.dump(2);
}

std::vector<DefaultEntry> defaults_table() {
  const JobConfig c;
  auto num = [](double v) { return format_double(v); };
  return {
      {"seed", std::to_string(c.seed), "RNG seed for every randomized sweep"},
      {"threads", "0", "render workers (0 = hardware concurrency)"},
      {"maxiter", std::to_string(c.maxiter), "escape-time iteration cap"},
      {"radius", num(c.radius), "escape radius R"},
      {"tolerances.singular", num(c.tol.singular), "sigma_min <= tol * max(1, sigma_max)"},
      {"tolerances.rank", num(c.tol.rank), "numeric rank cutoff, relative to sigma_max"},
      {"tolerances.agreement", num(c.tol.agreement), "closed form vs direct iteration"},
      {"tolerances.degenerate", num(c.tol.degenerate), "|z0^2 - z2^2| cutoff for the semiconjugacy"},
      {"commutator", num(kCommuteTol), "relative commutator norm for commuting tuples"},
      {"tau.zero", num(static_cast<double>(kTauZeroTol)), "tau numerator treated as zero"},
      {"julia.interval", num(static_cast<double>(kRealAxisTol)), "analytic distance to [-1, 1]"},
      {"indeterminate", num(static_cast<double>(kIndeterminateTol)), "all map components below this"},
      {"slice", "chart z0=1, Re z1 x Re z2 in [-3,3]^2, 256x256", "sampling grid"},
      {"samples", std::to_string(c.samples), "random points for the sampled H0 test"},
      {"verify_points", std::to_string(c.verify_points), "random points per verify sweep"},
      {"steps", std::to_string(c.steps), "iterate: number of steps"},
      {"map", c.map, "iterate: renormalization | cubic"},
      {"group", "dihedral, order 4", "group: default group"},
  };
}

std::string format_defaults() {
  std::string out;
  for (const auto& e : defaults_table()) {
    std::string key = e.key;
    key.resize(std::max<std::size_t>(key.size(), 24), ' ');
    std::string value = e.value;
    value.resize(std::max<std::size_t>(value.size(), 14), ' ');
    out += key + value + "  " + e.meaning + "\n";
  }
  return out;
}

}  // namespace projspec
