#include "steiner/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/extension.hpp"
#include "steiner/format.hpp"
#include "steiner/geometry.hpp"
#include "steiner/inertia_map.hpp"
#include "steiner/inertia_map_complex.hpp"
#include "steiner/verification.hpp"

namespace steiner {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_real(const std::string& s) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  // from_chars takes a leading minus but not a leading plus.
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || first == last)
    throw error(errc::invalid_argument, "could not parse number: " + s);
  return v;
}

// Accepts "2", "-1.5", "3i", "2+3i", "3-i", "1e-3-2.5e2i".
cplx parse_complex(const std::string& s) {
  if (s.empty())
    throw error(errc::invalid_argument, "empty number");
  if (s.back() == 'i' || s.back() == 'I') {
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
          body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    std::string re_text = "0";
    std::string im_text;
    if (split == std::string::npos) {
      im_text = body;
    } else {
      re_text = body.substr(0, split);
      im_text = body.substr(split);
    }
    if (im_text.empty() || im_text == "+")
      im_text = "1";
    else if (im_text == "-")
      im_text = "-1";
    return {parse_real(re_text), parse_real(im_text)};
  }
  return {parse_real(s), 0.0};
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
}

std::array<cplx, 3> parse_triple(const std::string& s) {
  const std::vector<std::string> parts = split_csv(s);
  if (parts.size() != 3)
    throw error(errc::invalid_argument,
                "a triple needs three comma-separated components: " + s);
  return {parse_complex(parts[0]), parse_complex(parts[1]),
          parse_complex(parts[2])};
}

bool all_real(const std::array<cplx, 3>& t) {
  return t[0].imag() == 0 && t[1].imag() == 0 && t[2].imag() == 0;
}

ordered_json json_number(cplx z, bool complex_mode) {
  if (!complex_mode) return z.real();
  return ordered_json::array({z.real(), z.imag()});
}

// Shared output plumbing: a command writes to the chosen stream, either
// stdout or the -o file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_)
      throw error(errc::invalid_argument, "cannot open output file: " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

struct CommonOpts {
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const char* def_format) {
  opts.format = def_format;
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opts.output, "write output to a file");
}

AxisRule parse_rule(const std::string& s) {
  if (s == "galois+") return GaloisRule{+1};
  if (s == "galois-") return GaloisRule{-1};
  if (s == "principal1") return PrincipalRule{1};
  if (s == "principal2") return PrincipalRule{2};
  if (s == "principal3") return PrincipalRule{3};
  if (s.rfind("fixed:", 0) == 0) {
    const std::array<cplx, 3> v = parse_triple(s.substr(6));
    if (!all_real(v))
      throw error(errc::invalid_argument, "fixed axis must be real: " + s);
    return FixedDirectionRule{
        make_unit_axis(v[0].real(), v[1].real(), v[2].real())};
  }
  throw error(errc::invalid_argument,
              "unknown axis rule (want galois+, galois-, principal1..3 or "
              "fixed:x,y,z): " +
                  s);
}

struct MapOpts {
  std::string triple;
  double shift = 0;
  std::string shift_text;
  double distance = 0;
  double mass = 1;
  bool force_complex = false;
  CommonOpts common;
  bool has_shift = false;
  bool has_distance = false;
  bool has_mass = false;
};

int cmd_map(const MapOpts& o, std::ostream& outs) {
  const std::array<cplx, 3> raw = parse_triple(o.triple);
  if (o.has_shift == o.has_distance)
    throw error(errc::invalid_argument,
                "give exactly one of -x/--shift or --distance");
  if (o.has_mass && !o.has_distance)
    throw error(errc::invalid_argument, "--mass requires --distance");

  cplx x;
  if (o.has_shift)
    x = parse_complex(o.shift_text);
  else
    x = o.mass * o.distance * o.distance;

  const bool complex_mode = o.force_complex || !all_real(raw) || x.imag() != 0;
  std::array<cplx, 3> lambda;
  if (complex_mode) {
    const ComplexTriple image =
        inertia_map(ComplexTriple{raw[0], raw[1], raw[2]}, x);
    lambda = {image.a, image.b, image.c};
  } else {
    const InertiaTriple t =
        validate_triple(raw[0].real(), raw[1].real(), raw[2].real());
    const InertiaTriple image = inertia_map(t, x.real());
    lambda = {image.a, image.b, image.c};
  }

  if (o.common.format == "json") {
    ordered_json doc;
    doc["command"] = "map";
    doc["mode"] = complex_mode ? "complex" : "real";
    doc["lambda"] = ordered_json::array({json_number(lambda[0], complex_mode),
                                         json_number(lambda[1], complex_mode),
                                         json_number(lambda[2], complex_mode)});
    outs << doc.dump(2) << "\n";
  } else {
    outs << format_complex(lambda[0]) << "," << format_complex(lambda[1])
         << "," << format_complex(lambda[2]) << "\n";
  }
  return 0;
}

struct OrbitOpts {
  std::string triple;
  double shift = 0;
  std::size_t steps = 16;
  CommonOpts common;
};

int cmd_orbit(const OrbitOpts& o, std::ostream& outs) {
  if (o.steps < 1)
    throw error(errc::invalid_argument, "orbit needs at least one step");
  const std::array<cplx, 3> raw = parse_triple(o.triple);
  if (!all_real(raw))
    throw error(errc::invalid_argument, "orbit requires a real triple");
  const InertiaTriple t =
      validate_triple(raw[0].real(), raw[1].real(), raw[2].real());

  ordered_json rows = ordered_json::array();
  const bool json = o.common.format == "json";
  if (!json) outs << "x,lambda1,lambda2,lambda3\n";
  for (std::size_t k = 0; k <= o.steps; ++k) {
    const double xk = o.shift * (static_cast<double>(k) /
                                 static_cast<double>(o.steps));
    const InertiaTriple image = inertia_map(t, xk);
    if (json) {
      rows.push_back({{"x", xk},
                      {"lambda1", image.a},
                      {"lambda2", image.b},
                      {"lambda3", image.c}});
    } else {
      outs << format_double(xk) << "," << format_double(image.a) << ","
           << format_double(image.b) << "," << format_double(image.c) << "\n";
    }
  }
  if (json) {
    ordered_json doc;
    doc["command"] = "orbit";
    doc["rows"] = std::move(rows);
    outs << doc.dump(2) << "\n";
  }
  return 0;
}

struct AxesOpts {
  std::string triple;
  CommonOpts common;
};

int cmd_axes(const AxesOpts& o, std::ostream& outs) {
  const std::array<cplx, 3> raw = parse_triple(o.triple);
  if (!all_real(raw))
    throw error(errc::invalid_argument, "axes requires a real triple");
  const InertiaTriple t =
      validate_triple(raw[0].real(), raw[1].real(), raw[2].real());
  const auto [plus, minus] = galois_axes(t);

  if (o.common.format == "json") {
    ordered_json doc;
    doc["command"] = "axes";
    doc["axes"] = ordered_json::array();
    for (const AxisVector& n : {plus, minus}) {
      doc["axes"].push_back(
          {{"n", {n.n1, n.n2, n.n3}},
           {"residual", maccullagh_residual(t, n)}});
    }
    outs << doc.dump(2) << "\n";
  } else {
    outs << "n1,n2,n3,residual\n";
    for (const AxisVector& n : {plus, minus}) {
      outs << format_double(n.n1) << "," << format_double(n.n2) << ","
           << format_double(n.n3) << ","
           << format_double(maccullagh_residual(t, n)) << "\n";
    }
  }
  return 0;
}

struct VerifyOpts {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  CommonOpts common;
};

int cmd_verify(const VerifyOpts& o, std::ostream& outs) {
  const std::vector<PropertyResult> results =
      run_property_suite(o.samples, o.seed);
  const bool all_pass =
      std::all_of(results.begin(), results.end(),
                  [](const PropertyResult& r) { return r.pass; });

  if (o.common.format == "json") {
    ordered_json doc;
    doc["command"] = "verify";
    doc["seed"] = o.seed;
    doc["samples"] = o.samples;
    doc["properties"] = ordered_json::array();
    for (const PropertyResult& r : results) {
      doc["properties"].push_back({{"property", r.property},
                                   {"samples", r.samples},
                                   {"worst", r.worst},
                                   {"threshold", r.threshold},
                                   {"pass", r.pass}});
    }
    doc["all_pass"] = all_pass;
    outs << doc.dump(2) << "\n";
  } else {
    outs << "property,samples,worst,threshold,pass\n";
    for (const PropertyResult& r : results) {
      outs << r.property << "," << r.samples << "," << format_double(r.worst)
           << "," << format_double(r.threshold) << ","
           << (r.pass ? "true" : "false") << "\n";
    }
  }
  return all_pass ? 0 : 2;
}

struct ExtendedOpts {
  std::vector<std::string> mul;
  std::string inv;
  std::string apply_elem;
  std::string triple;
  std::string context = "complex";
  CommonOpts common;
};

ScaledShift parse_elem(const std::string& s, ScalingContext ctx) {
  const std::vector<std::string> parts = split_csv(s);
  if (parts.size() != 2)
    throw error(errc::invalid_argument,
                "an element needs two comma-separated components: " + s);
  return make_scaled_shift(parse_complex(parts[0]), parse_complex(parts[1]),
                           ctx);
}

void print_elem(const ScaledShift& e, const CommonOpts& common,
                std::ostream& outs) {
  const bool complex_mode = e.context == ScalingContext::complex_group;
  if (common.format == "json") {
    ordered_json doc;
    doc["command"] = "extended";
    doc["a"] = json_number(e.a, complex_mode);
    doc["b"] = json_number(e.b, complex_mode);
    outs << doc.dump(2) << "\n";
  } else {
    outs << format_complex(e.a) << "," << format_complex(e.b) << "\n";
  }
}

int cmd_extended(const ExtendedOpts& o, std::ostream& outs) {
  const ScalingContext ctx = o.context == "real"
                                 ? ScalingContext::real_semigroup
                                 : ScalingContext::complex_group;
  const int ops = (o.mul.empty() ? 0 : 1) + (o.inv.empty() ? 0 : 1) +
                  (o.apply_elem.empty() ? 0 : 1);
  if (ops != 1)
    throw error(errc::invalid_argument,
                "give exactly one of --mul, --inv or --apply");

  if (!o.mul.empty()) {
    print_elem(compose(parse_elem(o.mul[0], ctx), parse_elem(o.mul[1], ctx)),
               o.common, outs);
    return 0;
  }
  if (!o.inv.empty()) {
    print_elem(inverse(parse_elem(o.inv, ctx)), o.common, outs);
    return 0;
  }

  if (o.triple.empty())
    throw error(errc::invalid_argument, "--apply needs -t/--triple");
  const ScaledShift e = parse_elem(o.apply_elem, ctx);
  const std::array<cplx, 3> raw = parse_triple(o.triple);
  std::array<cplx, 3> lambda;
  bool complex_mode = ctx == ScalingContext::complex_group;
  if (ctx == ScalingContext::real_semigroup) {
    if (!all_real(raw))
      throw error(errc::invalid_argument,
                  "real context requires a real triple");
    const InertiaTriple t =
        validate_triple(raw[0].real(), raw[1].real(), raw[2].real());
    const InertiaTriple image = apply(e, t);
    lambda = {image.a, image.b, image.c};
  } else {
    const ComplexTriple image =
        apply(e, ComplexTriple{raw[0], raw[1], raw[2]});
    lambda = {image.a, image.b, image.c};
  }

  if (o.common.format == "json") {
    ordered_json doc;
    doc["command"] = "extended";
    doc["lambda"] = ordered_json::array({json_number(lambda[0], complex_mode),
                                         json_number(lambda[1], complex_mode),
                                         json_number(lambda[2], complex_mode)});
    outs << doc.dump(2) << "\n";
  } else {
    outs << format_complex(lambda[0]) << "," << format_complex(lambda[1])
         << "," << format_complex(lambda[2]) << "\n";
  }
  return 0;
}

struct FalsifyOpts {
  std::size_t samples = 1000;
  std::uint64_t seed = 7;
  std::size_t threads = 0;
  std::vector<std::string> rule_specs;
  CommonOpts common;
};

int cmd_falsify(const FalsifyOpts& o, std::ostream& outs) {
  std::vector<AxisRule> rules;
  if (o.rule_specs.empty()) {
    rules = {GaloisRule{+1}, PrincipalRule{1},
             FixedDirectionRule{make_unit_axis(1, 1, 1)}};
  } else {
    for (const std::string& s : o.rule_specs) rules.push_back(parse_rule(s));
  }

  const FalsifyReport report =
      falsify_search(rules, o.samples, o.seed, {}, o.threads);

  if (o.common.format == "json") {
    ordered_json doc;
    doc["command"] = "falsify";
    doc["seed"] = report.seed;
    doc["samples"] = report.samples;
    doc["rules"] = ordered_json::array();
    for (const RuleReport& r : report.rules) {
      doc["rules"].push_back({{"rule", r.rule},
                              {"samples", r.samples},
                              {"failures", r.failures},
                              {"max_residual", r.max_residual},
                              {"median_residual", r.median_residual},
                              {"worst_sample",
                               {{"a", r.worst.a},
                                {"b", r.worst.b},
                                {"c", r.worst.c},
                                {"x", r.worst.x},
                                {"y", r.worst.y}}}});
    }
    outs << doc.dump(2) << "\n";
  } else {
    outs << "rule,samples,failures,max_residual,median_residual,"
            "worst_a,worst_b,worst_c,worst_x,worst_y\n";
    for (const RuleReport& r : report.rules) {
      outs << r.rule << "," << r.samples << "," << r.failures << ","
           << format_double(r.max_residual) << ","
           << format_double(r.median_residual) << ","
           << format_double(r.worst.a) << "," << format_double(r.worst.b)
           << "," << format_double(r.worst.c) << ","
           << format_double(r.worst.x) << "," << format_double(r.worst.y)
           << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"shift maps of principal inertia moments and their geometry"};
  app.require_subcommand(1);

  MapOpts map_opts;
  CLI::App* map_cmd =
      app.add_subcommand("map", "apply one shift map to a triple");
  map_cmd->add_option("-t,--triple", map_opts.triple, "moments a,b,c")
      ->required();
  CLI::Option* shift_opt =
      map_cmd->add_option("-x,--shift", map_opts.shift_text,
                          "shift parameter (may be complex)");
  CLI::Option* dist_opt = map_cmd->add_option(
      "--distance", map_opts.distance, "axis offset d; the shift is m*d^2");
  CLI::Option* mass_opt =
      map_cmd->add_option("--mass", map_opts.mass, "point mass m, default 1");
  map_cmd->add_flag("--complex", map_opts.force_complex,
                    "use the two-valued map even for real input");
  add_common(map_cmd, map_opts.common, "csv");

  OrbitOpts orbit_opts;
  CLI::App* orbit_cmd = app.add_subcommand(
      "orbit", "tabulate the shift orbit from 0 to the given parameter");
  orbit_cmd->add_option("-t,--triple", orbit_opts.triple, "moments a,b,c")
      ->required();
  orbit_cmd->add_option("-x,--shift", orbit_opts.shift, "final shift")
      ->required();
  orbit_cmd->add_option("-n,--steps", orbit_opts.steps,
                        "number of steps (rows = steps + 1)");
  add_common(orbit_cmd, orbit_opts.common, "csv");

  AxesOpts axes_opts;
  CLI::App* axes_cmd = app.add_subcommand(
      "axes", "axes of circular section with their section spread");
  axes_cmd->add_option("-t,--triple", axes_opts.triple, "moments a,b,c")
      ->required();
  add_common(axes_cmd, axes_opts.common, "csv");

  VerifyOpts verify_opts;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the structural property suite");
  verify_cmd->add_option("-n,--samples", verify_opts.samples,
                         "samples per property");
  verify_cmd->add_option("--seed", verify_opts.seed, "sampling seed");
  add_common(verify_cmd, verify_opts.common, "json");

  ExtendedOpts ext_opts;
  CLI::App* ext_cmd = app.add_subcommand(
      "extended", "compose, invert or apply scaled-shift elements (a,b)");
  ext_cmd->add_option("--mul", ext_opts.mul, "compose two elements a,b a,b")
      ->expected(2);
  ext_cmd->add_option("--inv", ext_opts.inv, "invert an element a,b");
  ext_cmd->add_option("--apply", ext_opts.apply_elem,
                      "apply an element a,b to the -t triple");
  ext_cmd->add_option("-t,--triple", ext_opts.triple, "moments a,b,c");
  ext_cmd->add_option("--context", ext_opts.context,
                      "parameter domain: real semigroup or complex group")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  add_common(ext_cmd, ext_opts.common, "csv");

  FalsifyOpts falsify_opts;
  CLI::App* falsify_cmd = app.add_subcommand(
      "falsify", "random search for shift-additivity violations");
  falsify_cmd->add_option("-n,--samples", falsify_opts.samples,
                          "number of draws");
  falsify_cmd->add_option("--seed", falsify_opts.seed, "sampling seed");
  falsify_cmd->add_option("--threads", falsify_opts.threads,
                          "worker threads, 0 = auto");
  falsify_cmd->add_option(
      "--rule", falsify_opts.rule_specs,
      "axis rule (galois+, galois-, principal1..3, fixed:x,y,z); "
      "repeatable");
  add_common(falsify_cmd, falsify_opts.common, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "USAGE: " << e.what() << "\n";
    return 1;
  }

  map_opts.has_shift = shift_opt->count() > 0;
  map_opts.has_distance = dist_opt->count() > 0;
  map_opts.has_mass = mass_opt->count() > 0;

  try {
    if (map_cmd->parsed()) {
      Sink sink(map_opts.common.output, out);
      return cmd_map(map_opts, sink.get());
    }
    if (orbit_cmd->parsed()) {
      Sink sink(orbit_opts.common.output, out);
      return cmd_orbit(orbit_opts, sink.get());
    }
    if (axes_cmd->parsed()) {
      Sink sink(axes_opts.common.output, out);
      return cmd_axes(axes_opts, sink.get());
    }
    if (verify_cmd->parsed()) {
      Sink sink(verify_opts.common.output, out);
      return cmd_verify(verify_opts, sink.get());
    }
    if (ext_cmd->parsed()) {
      Sink sink(ext_opts.common.output, out);
      return cmd_extended(ext_opts, sink.get());
    }
    if (falsify_cmd->parsed()) {
      Sink sink(falsify_opts.common.output, out);
      return cmd_falsify(falsify_opts, sink.get());
    }
    err << "USAGE: no command given\n";
    return 1;
  } catch (const error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "INTERNAL: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace steiner
