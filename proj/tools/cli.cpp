#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "flagcodes/codefile.hpp"
#include "flagcodes/construct.hpp"
#include "flagcodes/error.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes::cli {
namespace {

using json = nlohmann::ordered_json;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldOptions {
  std::optional<std::uint32_t> p, e;
  std::optional<std::uint64_t> q;

  void add_to(CLI::App& app) {
    app.add_option("--p", p, "field characteristic");
    app.add_option("--e", e, "prime degree of the field (default 1)");
    app.add_option("--q", q, "field order p^e");
  }

  FieldSpec resolve() const {
    FieldSpec spec;
    if (q) {
      const std::vector<std::uint64_t> primes = prime_factors(*q);
      if (*q < 2 || primes.size() != 1) throw UsageFailure("--q must be a prime power");
      std::uint32_t deg = 0;
      for (std::uint64_t r = *q; r > 1; r /= primes[0]) ++deg;
      spec.p = static_cast<std::uint32_t>(primes[0]);
      spec.e = deg;
      if ((p && *p != spec.p) || (e && *e != spec.e)) throw UsageFailure("--q disagrees with --p/--e");
      return spec;
    }
    if (!p) throw UsageFailure("give --p (and optionally --e) or --q");
    spec.p = *p;
    spec.e = e.value_or(1);
    if (spec.e == 0) throw UsageFailure("--e must be positive");
    return spec;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoFailure("cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoFailure("cannot write " + path);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t field_order(const FieldSpec& spec) { return checked_pow(spec.p, spec.e); }

// Minimum distance for a summary: 0 for a single flag, the bound when every
// projection certifies it, the pairwise minimum otherwise.
std::size_t summary_distance(const FlagCode& c, bool odfc) {
  if (c.size() < 2) return 0;
  if (odfc) return flag_distance_bound(c.type());
  return flag_code_distance(c);
}

json code_summary(const FlagCode& c) {
  const bool odfc = c.size() >= 2 && is_odfc_componentwise(c);
  json j;
  j["size"] = c.size();
  j["type"] = c.type().to_string();
  j["distance"] = summary_distance(c, odfc);
  j["bound"] = flag_distance_bound(c.type());
  j["is_odfc"] = odfc;
  return j;
}

struct ConstructOptions {
  FieldOptions field;
  std::size_t k = 0;
  std::size_t s = 0;
  std::uint64_t t = 0;
  bool max_size = false;
  std::string output;
};

json construct_spread(const ConstructOptions& o, const FieldSpec& spec, std::uint64_t t, const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  const SpreadContext ctx = build_spread_context(spec.make(), o.k, o.s);
  require_spread_gcd_condition(ctx, t);
  FieldSpec out_spec = spec;
  out_spec.tower = std::make_pair(o.k, o.s);

  json j;
  j["construction"] = label;
  j["q"] = ctx.q();
  j["k"] = o.k;
  j["s"] = o.s;
  j["n"] = ctx.n;
  j["t"] = t;
  std::optional<FlagCode> code;
  if (o.max_size) {
    SpreadUnionCode u = spread_type_max_odfc(ctx, t);
    j["orbits"] = u.representatives.size();
    j["representatives"] = u.representatives;
    code.emplace(std::move(u.code));
  } else {
    SpreadOrbitCode r = spread_type_orbit_odfc(ctx, t);
    j["orbits"] = 1;
    j["stabilizer_order"] = r.stabilizer_order;
    code.emplace(std::move(r.code));
  }
  const std::string path = o.output.empty() ? "spread_q" + std::to_string(ctx.q()) + "_k" + std::to_string(o.k) +
                                                  "_s" + std::to_string(o.s) + "_t" + std::to_string(t) +
                                                  (o.max_size ? "_max" : "") + ".flagcode"
                                            : o.output;
  write_file(path, serialize_flag_code(*code, out_spec));
  j.update(code_summary(*code));
  j["output"] = path;
  j["runtime_ms"] = elapsed_ms(start);
  return j;
}

json construct_full(const ConstructOptions& o, const FieldSpec& spec) {
  if (o.k == 0) throw UsageFailure("--k must be at least 1");
  if (o.k == 1) {
    // n = 3: the full type coincides with the spread type for k = 1, s = 3.
    ConstructOptions routed = o;
    routed.s = 3;
    const std::uint64_t q = field_order(spec);
    return construct_spread(routed, spec, checked_pow(q, 3) - 1, "full-type (k=1, spread-type path)");
  }
  const auto start = std::chrono::steady_clock::now();
  const FullTypeContext ctx = build_full_type_context(spec.make(), o.k);
  const FullTypeParams params = default_full_type_params(ctx);
  json j;
  j["construction"] = "full-type";
  j["q"] = field_order(spec);
  j["k"] = o.k;
  j["n"] = ctx.n;
  std::optional<FlagCode> code;
  if (o.max_size) {
    code.emplace(full_type_max_odfc(ctx, params.u1, params.u2, params.v2));
    j["orbits"] = 1;
    j["extra_flags"] = 2;
  } else {
    FullTypeOrbitCode r = full_type_orbit_odfc(ctx, full_type_generator_flag(ctx, params));
    j["orbits"] = 1;
    j["rank_condition"] = r.rank_condition;
    code.emplace(std::move(r.code));
  }
  const std::string path = o.output.empty() ? "full_q" + std::to_string(field_order(spec)) + "_k" +
                                                  std::to_string(o.k) + (o.max_size ? "_max" : "") + ".flagcode"
                                            : o.output;
  write_file(path, serialize_flag_code(*code, spec));
  j.update(code_summary(*code));
  j["output"] = path;
  j["runtime_ms"] = elapsed_ms(start);
  return j;
}

constexpr std::uint64_t kPairwiseLimit = 200000;

json verify_flag_code(const FlagCodeFile& file, const std::string& method) {
  const FlagCode& c = file.code;
  const TypeVector& type = c.type();
  json j;
  j["kind"] = "flag";
  j["field"] = {{"p", file.field.p}, {"e", file.field.e}};
  j["ambient"] = c.ambient();
  j["size"] = c.size();
  j["type"] = type.to_string();

  json projections = json::array();
  for (std::size_t i = 0; i < type.length(); ++i) {
    const SubspaceCode proj = projected_code(c, i);
    projections.push_back({{"index", i + 1},
                           {"dim", type[i]},
                           {"size", proj.size()},
                           {"distance", proj.size() < 2 ? 0 : code_distance(proj)},
                           {"bound", max_distance_bound(type.ambient(), type[i])}});
  }
  j["projections"] = projections;
  j["disjoint"] = is_disjoint(c);
  const CriticalIndices ci = critical_indices(type);
  j["critical_a"] = ci.a ? json(*ci.a + 1) : json(nullptr);
  j["critical_b"] = ci.b ? json(*ci.b + 1) : json(nullptr);

  const std::uint64_t pairs = static_cast<std::uint64_t>(c.size()) * (c.size() - 1) / 2;
  std::string used = method;
  if (used == "auto") used = pairs <= kPairwiseLimit ? "pairwise" : "componentwise";
  const bool by_definition = used == "pairwise" ? is_odfc_by_definition(c) : is_odfc_componentwise(c);
  const bool by_characterization = is_odfc_by_characterization(c);
  j["distance"] = summary_distance(c, by_definition);
  j["bound"] = flag_distance_bound(type);
  j["odfc_by_definition"] = by_definition;
  j["odfc_by_characterization"] = by_characterization;
  j["agree"] = by_definition == by_characterization;
  j["definition_method"] = used;
  return j;
}

json verify_subspace_code(const SubspaceCodeFile& file) {
  const SubspaceCode& c = file.code;
  json j;
  j["kind"] = "subspace";
  j["field"] = {{"p", file.field.p}, {"e", file.field.e}};
  j["ambient"] = c.ambient();
  j["dim"] = c.dim();
  j["size"] = c.size();
  j["distance"] = c.size() < 2 ? 0 : code_distance(c);
  j["bound"] = max_distance_bound(c.ambient(), c.dim());
  j["max_distance"] = c.size() >= 2 && has_max_distance(c);
  j["partial_spread"] = is_partial_spread(c);
  j["spread"] = is_spread(c);
  return j;
}

json verify_file(const std::string& path, const std::string& method) {
  const std::string text = read_file(path);
  if (text.rfind("SUBCODE", 0) == 0) return verify_subspace_code(parse_subspace_code(text));
  return verify_flag_code(parse_flag_code(text), method);
}

struct TableSetting {
  std::uint32_t p, e;
  std::size_t k, s;
};

TableSetting table_setting(int which) {
  if (which == 1) return {3, 1, 3, 2};
  return {2, 2, 3, 3};
}

json table_json(const SpreadContext& ctx, const std::vector<TableRow>& rows) {
  json j;
  j["q"] = ctx.q();
  j["k"] = ctx.k;
  j["s"] = ctx.s;
  j["n"] = ctx.n;
  j["spread_size"] = ctx.spread_size();
  json arr = json::array();
  for (const TableRow& r : rows) {
    arr.push_back({{"t", r.t}, {"orbit_size", r.orbit_size}, {"orbits_needed", r.orbits_needed}});
  }
  j["rows"] = arr;
  return j;
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::vector<std::string> line_t{"t"}, line_size{"orbit size"}, line_m{"orbits needed"};
  for (const TableRow& r : rows) {
    line_t.push_back(std::to_string(r.t));
    line_size.push_back(std::to_string(r.orbit_size));
    line_m.push_back(std::to_string(r.orbits_needed));
  }
  std::vector<std::size_t> width(line_t.size(), 0);
  for (const auto* line : {&line_t, &line_size, &line_m}) {
    for (std::size_t i = 0; i < line->size(); ++i) width[i] = std::max(width[i], (*line)[i].size());
  }
  std::ostringstream os;
  for (const auto* line : {&line_t, &line_size, &line_m}) {
    for (std::size_t i = 0; i < line->size(); ++i) {
      const std::string& cell = (*line)[i];
      if (i == 0) {
        os << cell << std::string(width[i] - cell.size(), ' ') << " |";
      } else {
        os << ' ' << std::string(width[i] - cell.size(), ' ') << cell;
      }
    }
    os << '\n';
  }
  return os.str();
}

json spread_command(const FieldSpec& spec, std::size_t k, std::size_t s, const std::string& output,
                    const std::string& hyper_output) {
  if (k < 1) throw UsageFailure("--k must be at least 1");
  if (s < 2) throw UsageFailure("--s must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  const SpreadContext ctx = build_spread_context(spec.make(), k, s);
  FieldSpec out_spec = spec;
  out_spec.tower = std::make_pair(k, s);
  const std::string path = output.empty() ? "spread_q" + std::to_string(ctx.q()) + "_k" + std::to_string(k) + "_s" +
                                                std::to_string(s) + ".subcode"
                                          : output;
  write_file(path, serialize_subspace_code(ctx.spread, out_spec));
  json j;
  j["q"] = ctx.q();
  j["k"] = k;
  j["s"] = s;
  j["n"] = ctx.n;
  j["size"] = ctx.spread.size();
  j["is_spread"] = is_spread(ctx.spread);
  j["output"] = path;
  if (!hyper_output.empty()) {
    write_file(hyper_output, serialize_subspace_code(ctx.hyperplanes, out_spec));
    j["hyperplanes"] = {{"size", ctx.hyperplanes.size()},
                        {"max_distance", has_max_distance(ctx.hyperplanes)},
                        {"output", hyper_output}};
  }
  j["runtime_ms"] = elapsed_ms(start);
  return j;
}

bool is_parameter_error(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic:
    case Errc::FieldTooLarge:
    case Errc::BadDimensions:
    case Errc::EnumerationTooLarge:
    case Errc::NotADivisor:
    case Errc::GcdConditionFailed:
    case Errc::KTooSmall:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag codes of maximum distance from Singer groups", "flagcodes"};
  app.require_subcommand(1);

  CLI::App* construct = app.add_subcommand("construct", "build a flag code and write it to a file");
  construct->require_subcommand(1);

  ConstructOptions spread_opts;
  CLI::App* spread_type = construct->add_subcommand("spread-type", "orbit code of admissible type from a spread");
  spread_opts.field.add_to(*spread_type);
  spread_type->add_option("--k", spread_opts.k, "spread element dimension")->required();
  spread_type->add_option("--s", spread_opts.s, "n = k s")->required();
  spread_type->add_option("--t", spread_opts.t, "subgroup order, a divisor of q^n - 1")->required();
  spread_type->add_flag("--max-size", spread_opts.max_size, "union of orbits reaching the largest size");
  spread_type->add_option("-o,--output", spread_opts.output, "output file");

  ConstructOptions full_opts;
  CLI::App* full_type = construct->add_subcommand("full-type", "full-type code on GF(q)^(2k+1)");
  full_opts.field.add_to(*full_type);
  full_type->add_option("--k", full_opts.k, "n = 2k + 1")->required();
  full_type->add_flag("--max-size", full_opts.max_size, "add the two extra flags");
  full_type->add_option("-o,--output", full_opts.output, "output file");

  std::string verify_path;
  std::string verify_method = "auto";
  CLI::App* verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("file", verify_path, "FLAGCODE or SUBCODE file")->required();
  verify->add_option("--method", verify_method, "definition check: auto, pairwise or componentwise")
      ->check(CLI::IsMember({"auto", "pairwise", "componentwise"}));

  int table_which = 0;
  std::string table_format = "both";
  CLI::App* table = app.add_subcommand("table", "orbit sizes for the two worked spread settings");
  table->add_option("which", table_which, "1 (q=3, n=6) or 2 (q=4, n=9)")->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--format", table_format, "text, json or both")->check(CLI::IsMember({"text", "json", "both"}));

  FieldOptions spread_field;
  std::size_t spread_k = 0, spread_s = 0;
  std::string spread_output, spread_hyper;
  CLI::App* spread = app.add_subcommand("spread", "write the Desarguesian spread as a subspace code");
  spread_field.add_to(*spread);
  spread->add_option("--k", spread_k, "spread element dimension")->required();
  spread->add_option("--s", spread_s, "n = k s")->required();
  spread->add_option("-o,--output", spread_output, "output file");
  spread->add_option("--hyperplanes", spread_hyper, "also write the hyperplane code to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadParameters;
  }

  try {
    json result;
    if (spread_type->parsed()) {
      result = construct_spread(spread_opts, spread_opts.field.resolve(), spread_opts.t, "spread-type");
    } else if (full_type->parsed()) {
      result = construct_full(full_opts, full_opts.field.resolve());
    } else if (verify->parsed()) {
      result = verify_file(verify_path, verify_method);
    } else if (table->parsed()) {
      const TableSetting st = table_setting(table_which);
      const SpreadContext ctx = build_spread_context(make_field(st.p, st.e), st.k, st.s);
      std::vector<TableRow> rows;
      for (std::uint64_t t : admissible_orders(ctx)) rows.push_back(table_row(ctx, t));
      if (table_format != "json") out << table_text(rows);
      if (table_format != "text") out << table_json(ctx, rows).dump(2) << '\n';
      return kOk;
    } else if (spread->parsed()) {
      result = spread_command(spread_field.resolve(), spread_k, spread_s, spread_output, spread_hyper);
    }
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_parameter_error(e.code()) ? kBadParameters : kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace flagcodes::cli
