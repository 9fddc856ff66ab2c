/*
 * Copyright 2026 The orbitcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. run() takes explicit streams so tests can drive it in-process.

#ifndef ORBITCODE_TOOLS_COMMANDS_HPP
#define ORBITCODE_TOOLS_COMMANDS_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitcode/orbitcode.hpp"

namespace orbitcode::cli {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kRefuted = 2,
  kBudget = 3,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kInternal = 70,
  kCantCreate = 73,
};

struct IoError : Error {
  int code;
  IoError(int c, const std::string& m) : Error(m), code(c) {}
};

/// Relative output paths land under $ORBITCODE_OUTDIR when it is set.
inline std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("ORBITCODE_OUTDIR"); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  }
  return p;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(kNoInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream outf(path, std::ios::binary);
  if (!outf || !(outf << content)) throw IoError(kCantCreate, "cannot write '" + path.string() + "'");
}

inline json envelope(const std::string& command, json config, json result) {
  return json{{"tool", "orbitcode"}, {"version", kVersion}, {"command", command}, {"config", std::move(config)},
              {"result", std::move(result)}};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

/// "a*x^k + b*x^j + x": coefficients in hex, missing coefficient means 1, bare x means exponent 1.
inline SparseExponentPoly parse_poly(const std::string& text, const Field& field) {
  static const std::regex term_re(R"(^\s*(?:(?:0[xX])?([0-9a-fA-F]+)\s*\*\s*)?x(?:\s*\^\s*([0-9]+))?\s*$)");
  std::vector<ExponentTerm> terms;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, '+');) {
    std::smatch m;
    if (!std::regex_match(tok, m, term_re)) throw ParseError("bad polynomial term '" + tok + "'");
    const Element a = m[1].matched ? field.from_hex(m[1].str()) : Element{1};
    const std::uint64_t k = m[2].matched ? std::stoull(m[2].str()) : 1;
    if (!a.is_zero()) terms.push_back({a, k});
  }
  SparseExponentPoly f(std::move(terms));
  f.validate(field);
  return f;
}

inline std::optional<std::size_t> maybe_min_distance(const LinearCode& code) {
  if (code.is_zero()) return std::nullopt;
  if (code.rank() > kMaxEnumerationRank && code.length() - code.rank() > kMaxEnumerationRank) return std::nullopt;
  return min_distance(code);
}

inline json code_summary(const LinearCode& code) {
  json j{{"length", code.length()}, {"domain", to_string(code.kind())}, {"rank", code.rank()}};
  if (auto d = maybe_min_distance(code)) j["min_distance"] = *d;
  return j;
}

inline json weights_json(const WeightEnumerator& a) {
  json j = json::object();
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] != 0) j[std::to_string(w)] = a[w].str();
  return j;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  unsigned jobs = 1;
};

inline LinearCode load_code(const std::string& path) { return io::code_from_string(read_file(path)); }

inline std::pair<OrbitCertificate, Field> load_certificate(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("certificate '" + path + "' is not JSON: " + e.what());
  }
  return io::certificate_from_json(j);
}

inline unsigned field_degree_for(const LinearCode& code) {
  const std::size_t L = code.length();
  const std::size_t N = code.kind() == DomainKind::WithZero ? L : L + 1;
  if (N < 2 || !std::has_single_bit(N)) throw InvalidArgument("code length " + std::to_string(L) + " is not a field domain");
  return static_cast<unsigned>(std::countr_zero(N));
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string family;
  unsigned n = 3;
  unsigned t = 1;
  std::string degrees;
  std::string domain = "withzero";
  std::string out_path;
};

inline int cmd_build(const BuildArgs& a, Context& ctx) {
  const Field field(a.n);
  LinearCode code(DomainKind::Nonzero, 0);
  json config{{"family", a.family}, {"n", a.n}};
  if (a.family == "trace-code") {
    if (a.degrees.empty()) throw InvalidArgument("trace-code needs --degrees");
    std::vector<Degree> raw;
    for (auto d : parse_list(a.degrees)) {
      if (d > top_degree(a.n))
        throw InvalidArgument("degree " + std::to_string(d) + " exceeds N-1 = " + std::to_string(top_degree(a.n)));
      raw.push_back(static_cast<Degree>(d));
    }
    const DegreeSet D = DegreeSet::canonicalized(a.n, raw);
    const DomainKind kind = domain_kind_from_string(a.domain);
    code = code_from_degrees(D, kind, field);
    config["degrees"] = io::degrees_to_json(D);
    config["domain"] = a.domain;
  } else {
    config["t"] = a.t;
    if (a.family == "bch")
      code = bch({a.n, a.t, BchFlavor::Cyclic}, field);
    else if (a.family == "dual-bch")
      code = dual_bch({a.n, a.t, BchFlavor::Cyclic}, field);
    else if (a.family == "ebch")
      code = ebch(a.n, a.t, field);
    else if (a.family == "ebch-dual")
      code = ebch_dual(a.n, a.t, field);
    else
      throw InvalidArgument("unknown family '" + a.family + "'");
  }
  const json summary = envelope("build", config, code_summary(code));
  if (a.out_path.empty()) {
    io::write_code(ctx.out, code);
    ctx.err << dump(summary);
  } else {
    const auto path = resolve_output(a.out_path);
    write_file(path, io::code_to_string(code));
    if (ctx.format == "text")
      ctx.out << "wrote " << path.string() << ": length " << code.length() << ", rank " << code.rank() << "\n";
    else
      ctx.out << dump(summary);
  }
  return kOk;
}

// ---------------------------------------------------------------- find-orbit

struct FindArgs {
  std::string code_path;
  std::string group;
  std::optional<std::size_t> k_max;
  unsigned t = 1;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 24;
  std::string out_path;
};

inline int cmd_find_orbit(const FindArgs& a, Context& ctx) {
  const LinearCode code = load_code(a.code_path);
  const Field field(field_degree_for(code));
  const GroupKind kind = a.group.empty() ? (code.kind() == DomainKind::Nonzero ? GroupKind::Cyclic : GroupKind::Affine)
                                         : group_kind_from_string(a.group);
  const std::size_t k_max = a.k_max.value_or(default_k_max(a.t));
  SearchOptions opt{a.budget, a.seed, ctx.jobs, a.exhaustive_limit};
  const SearchResult r = find_single_orbit_generator(code, k_max, kind, field, opt);
  json config{{"code", a.code_path}, {"group", to_string(kind)}, {"k_max", k_max}, {"budget", a.budget},
              {"seed", a.seed}, {"exhaustive_limit", a.exhaustive_limit}};
  json result{{"status", to_string(r.status)}, {"method", r.method}, {"candidates_seen", r.candidates_seen},
              {"orbit_checks", r.orbit_checks}, {"trials", r.trials}};
  if (r.certificate) result["certificate"] = io::certificate_to_json(*r.certificate, field);
  const json doc = envelope("find-orbit", config, result);
  if (r.certificate && !a.out_path.empty()) {
    json cert = io::certificate_to_json(*r.certificate, field);
    cert["tool"] = "orbitcode";
    cert["version"] = kVersion;
    cert["config"] = config;
    write_file(resolve_output(a.out_path), dump(cert));
  }
  if (ctx.format == "text") {
    ctx.out << to_string(r.status) << " (" << r.method << ")";
    if (r.certificate) ctx.out << ": k=" << r.certificate->k << " generator=" << r.certificate->generator.to_hex();
    ctx.out << "\n";
  } else {
    ctx.out << dump(doc);
  }
  switch (r.status) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::Refuted: return kRefuted;
    case SearchStatus::BudgetExhausted: return kBudget;
  }
  return kInternal;
}

// ---------------------------------------------------------------- verify

inline int cmd_verify(const std::string& cert_path, const std::string& code_path, Context& ctx) {
  const auto [cert, field] = load_certificate(cert_path);
  const LinearCode code = load_code(code_path);
  json config{{"cert", cert_path}, {"code", code_path}};
  json result;
  bool ok = false;
  if (!cert.generator.same_domain(Codeword(code.kind(), code.length()))) {
    result = {{"ok", false}, {"reason", "certificate and code live on different domains"}};
  } else {
    const LinearCode s = orbit_span(cert.generator, cert.kind, field);
    ok = !cert.generator.is_zero() && cert.generator.weight() <= cert.k && s == code;
    std::vector<Codeword> both = s.basis_words();
    for (auto& w : code.basis_words()) both.push_back(w);
    const std::size_t joint = span(code.kind(), code.length(), both).rank();
    result = {{"ok", ok},
              {"generator_weight", cert.generator.weight()},
              {"k", cert.k},
              {"span_rank", s.rank()},
              {"code_rank", code.rank()},
              {"intersection_rank", s.rank() + code.rank() - joint}};
    if (!ok) result["reason"] = "orbit span differs from the code";
  }
  if (ctx.format == "text")
    ctx.out << (ok ? "ok" : "mismatch") << "\n";
  else
    ctx.out << dump(envelope("verify", config, result));
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- test

struct TestArgs {
  std::string word;
  std::string cert_path;
  std::string code_path;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  bool exact = false;
};

inline json tester_json(const TesterReport& r) {
  json j{{"k", r.k},           {"group", to_string(r.group)}, {"seed", r.seed},
         {"trials", r.trials}, {"accepts", r.accepts},         {"rejects", r.rejects},
         {"max_queries", r.max_queries}};
  j["empirical_rejection"] = r.empirical_rejection();
  j["standard_error"] = r.standard_error();
  if (r.exact_rejection) j["exact_rejection"] = *r.exact_rejection;
  return j;
}

inline int cmd_test(const TestArgs& a, Context& ctx) {
  const auto [cert, field] = load_certificate(a.cert_path);
  if (!a.code_path.empty()) {
    const LinearCode code = load_code(a.code_path);
    if (!reverify(cert, dual(code), field)) throw NotInvariant("certificate does not span the dual of the given code");
  }
  const Codeword v = Codeword::from_hex(cert.generator.kind(), cert.generator.length(), a.word);
  const TesterReport r = single_orbit_test(v, cert, field, a.seed, a.trials, a.exact, ctx.jobs);
  const double p = r.exact_rejection ? *r.exact_rejection : r.empirical_rejection();
  const bool accept = r.exact_rejection ? *r.exact_rejection == 0.0 : r.rejects == 0;
  json result = tester_json(r);
  result["verdict"] = accept ? "accept" : "reject";
  result["p_reject"] = p;
  json config{{"word", a.word}, {"cert", a.cert_path}, {"trials", a.trials}, {"seed", a.seed}, {"exact", a.exact}};
  if (!a.code_path.empty()) config["code"] = a.code_path;
  if (ctx.format == "text")
    ctx.out << (accept ? "accept" : "reject") << ", p_reject = " << p << "\n";
  else
    ctx.out << dump(envelope("test", config, result));
  return kOk;
}

// ---------------------------------------------------------------- soundness

struct SoundnessArgs {
  std::string cert_path;
  std::string code_path;
  std::string grid;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

inline int cmd_soundness(const SoundnessArgs& a, Context& ctx) {
  const auto [cert, field] = load_certificate(a.cert_path);
  const LinearCode code = load_code(a.code_path);
  const LinearCode target = dual(code);
  if (!reverify(cert, target, field)) throw NotInvariant("certificate does not span the dual of the given code");
  std::vector<std::size_t> grid;
  for (auto g : parse_list(a.grid)) grid.push_back(static_cast<std::size_t>(g));
  const SoundnessReport rep = soundness_curve(cert, target, field, grid, a.samples, a.seed);
  json config{{"cert", a.cert_path}, {"code", a.code_path}, {"grid", a.grid}, {"samples", a.samples}, {"seed", a.seed}};
  if (ctx.format == "csv") {
    ctx.out << "# orbitcode " << kVersion << " soundness " << config.dump() << "\n";
    ctx.out << "distance,relative_distance,cosets,samples,min_rejection,max_rejection,min_ratio\n";
    for (const auto& p : rep.points)
      ctx.out << p.distance << "," << p.relative_distance << "," << p.cosets << "," << p.samples << "," << p.min_rejection
              << "," << p.max_rejection << "," << p.min_ratio << "\n";
    return kOk;
  }
  if (ctx.format == "text") {
    ctx.out << std::left << std::setw(10) << "distance" << std::setw(10) << "cosets" << std::setw(16) << "min_reject"
            << "min_ratio\n";
    for (const auto& p : rep.points)
      ctx.out << std::setw(10) << p.distance << std::setw(10) << p.cosets << std::setw(16) << p.min_rejection << p.min_ratio
              << "\n";
    ctx.out << "alpha_hat = " << rep.alpha_hat << " (1/k^2 = " << rep.benchmark << ")\n";
    return kOk;
  }
  json points = json::array();
  for (const auto& p : rep.points)
    points.push_back({{"distance", p.distance},
                      {"relative_distance", p.relative_distance},
                      {"cosets", p.cosets},
                      {"samples", p.samples},
                      {"min_rejection", p.min_rejection},
                      {"max_rejection", p.max_rejection},
                      {"min_ratio", p.min_ratio}});
  json result{{"k", rep.k}, {"group", to_string(rep.group)}, {"points", points}, {"alpha_hat", rep.alpha_hat},
              {"benchmark_inverse_k_squared", rep.benchmark}};
  ctx.out << dump(envelope("soundness", config, result));
  return kOk;
}

// ---------------------------------------------------------------- charsum

inline int cmd_charsum(unsigned n, const std::string& poly, std::optional<double> epsilon, Context& ctx) {
  const Field field(n);
  const SparseExponentPoly f = parse_poly(poly, field);
  const std::int64_t s = char_sum(f, field);
  const std::size_t wt = trace_word(f, field).weight();
  json result{{"char_sum", s}, {"trace_weight", wt}, {"N", field.order()}};
  json config{{"n", n}, {"poly", poly}};
  if (epsilon) {
    config["epsilon"] = *epsilon;
    const auto rep = check_exponent_conditions(f, field, *epsilon);
    json single = json::array(), pairs = json::array();
    for (const auto& c : rep.single) single.push_back({{"k", c.k1}, {"gcd", c.gcd}, {"pass", c.pass}});
    for (const auto& c : rep.pairs) pairs.push_back({{"k_i", c.k1}, {"k_j", c.k2}, {"gcd", c.gcd}, {"pass", c.pass}});
    result["conditions"] = {{"threshold", rep.threshold}, {"range_ok", rep.range_ok}, {"single", single},
                            {"pairs", pairs}, {"all_pass", rep.all_pass()}};
  }
  if (ctx.format == "text")
    ctx.out << s << "\n";
  else
    ctx.out << dump(envelope("charsum", config, result));
  return kOk;
}

// ---------------------------------------------------------------- count

inline int cmd_count(const std::string& code_path, const std::string& ks, Context& ctx) {
  const LinearCode code = load_code(code_path);
  json rows = json::array();
  std::ostringstream text;
  for (auto k : parse_list(ks)) {
    const auto r = count_low_weight_dual(code, static_cast<std::size_t>(k));
    rows.push_back({{"k", r.k}, {"exact", r.exact.str()}, {"binomial", r.binom.str()}, {"code_size", r.code_size.str()},
                    {"predicted", r.predicted}, {"ratio", r.ratio}});
    text << r.k << "\t" << r.exact << "\t" << r.predicted << "\t" << r.ratio << "\n";
  }
  if (ctx.format == "text") {
    ctx.out << "k\texact\tpredicted\tratio\n" << text.str();
  } else {
    json result = rows.size() == 1 ? rows[0] : json{{"rows", rows}};
    ctx.out << dump(envelope("count", {{"code", code_path}, {"k", ks}}, result));
  }
  return kOk;
}

// ---------------------------------------------------------------- degrees / profile

inline int cmd_degrees(const std::string& code_path, Context& ctx) {
  const LinearCode code = load_code(code_path);
  const Field field(field_degree_for(code));
  const DegreeSet D = degrees_of_code(code, field);
  if (ctx.format == "text") {
    for (std::size_t i = 0; i < D.size(); ++i) ctx.out << (i ? "," : "") << D.degrees()[i];
    ctx.out << "\n";
  } else {
    ctx.out << dump(envelope("degrees", {{"code", code_path}},
                             {{"degrees", io::degrees_to_json(D)}, {"shadow_closed", shadow_closure(D) == D}}));
  }
  return kOk;
}

inline int cmd_profile(const std::string& code_path, Context& ctx) {
  const LinearCode code = load_code(code_path);
  const DistanceProfile p = distance_profile(code);
  json result{{"length", p.length},       {"min_weight", p.min_weight}, {"max_weight", p.max_weight},
              {"delta_min", p.delta_min}, {"delta_max", p.delta_max},   {"max_bias", p.max_bias},
              {"delta_hat", p.delta_hat}, {"weights", weights_json(weight_distribution(code, ctx.jobs))}};
  if (ctx.format == "text")
    ctx.out << p.delta_min << " " << p.delta_max << " " << p.delta_hat << "\n";
  else
    ctx.out << dump(envelope("profile", {{"code", code_path}}, result));
  return kOk;
}

// ---------------------------------------------------------------- entry point

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"orbitcode: trace codes, BCH families, single-orbit generators and their local tester"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--jobs", ctx.jobs, "Worker threads (0 = all cores)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a code and write it in the code file format");
  b->add_option("family", build.family, "bch | dual-bch | ebch | ebch-dual | trace-code")
      ->required()
      ->check(CLI::IsMember({"bch", "dual-bch", "ebch", "ebch-dual", "trace-code"}));
  b->add_option("--n", build.n, "Field degree")->check(CLI::Range(1u, Field::kMaxDegree));
  b->add_option("--t", build.t, "Designed parameter");
  b->add_option("--degrees", build.degrees, "Comma-separated degrees (trace-code)");
  b->add_option("--domain", build.domain, "withzero | nonzero (trace-code)")
      ->check(CLI::IsMember({"withzero", "nonzero"}));
  b->add_option("-o,--out", build.out_path, "Output code file");

  FindArgs find;
  auto* f = app.add_subcommand("find-orbit", "Search for a single-orbit generator (exit 0 found, 2 refuted, 3 budget)");
  f->add_option("--code", find.code_path, "Code file of the target C^perp")->required();
  f->add_option("--group", find.group, "cyclic | affine (default from the domain)")
      ->check(CLI::IsMember({"cyclic", "affine"}));
  f->add_option("--k-max", find.k_max, "Largest generator weight (default 2t+2)");
  f->add_option("--t", find.t, "Used for the default k-max");
  f->add_option("--budget", find.budget, "Sampling trials when enumeration is out of reach");
  f->add_option("--seed", find.seed, "Sampling seed");
  f->add_option("--exhaustive-limit", find.exhaustive_limit, "Largest enumeration attempted");
  f->add_option("-o,--out", find.out_path, "Certificate output file");

  std::string v_cert, v_code;
  auto* v = app.add_subcommand("verify", "Recompute a certificate's orbit span (exit 0 match, 1 mismatch)");
  v->add_option("--cert", v_cert, "Certificate JSON")->required();
  v->add_option("--code", v_code, "Code file")->required();

  TestArgs test;
  auto* t = app.add_subcommand("test", "Run the single-orbit tester on a word");
  t->add_option("--word", test.word, "Word in hex")->required();
  t->add_option("--cert", test.cert_path, "Certificate JSON")->required();
  t->add_option("--code", test.code_path, "Tested code file; re-verifies the certificate against its dual");
  t->add_option("--trials", test.trials, "Monte Carlo trials");
  t->add_option("--seed", test.seed, "Seed");
  t->add_flag("--exact", test.exact, "Also compute the exact rejection probability");

  SoundnessArgs snd;
  auto* s = app.add_subcommand("soundness", "Rejection versus distance over cosets of the tested code");
  s->add_option("--cert", snd.cert_path, "Certificate JSON")->required();
  s->add_option("--code", snd.code_path, "Tested code file (the certificate spans its dual)")->required();
  s->add_option("--grid", snd.grid, "Comma-separated distances (default: all)");
  s->add_option("--samples", snd.samples, "Samples per distance (0 = every coset once)");
  s->add_option("--seed", snd.seed, "Seed");

  unsigned cs_n = 3;
  std::string cs_poly;
  std::optional<double> cs_eps;
  auto* c = app.add_subcommand("charsum", "Exact character sum of Trace(f)");
  c->add_option("--n", cs_n, "Field degree")->check(CLI::Range(1u, 20u));
  c->add_option("--poly", cs_poly, "Polynomial, e.g. \"1*x^3 + a*x^5\" with hex coefficients")->required();
  c->add_option("--epsilon", cs_eps, "Also check the gcd conditions at this epsilon");

  std::string cnt_code, cnt_k;
  auto* k = app.add_subcommand("count", "Weight-k words of the dual against C(L,k)/|C|");
  k->add_option("--code", cnt_code, "Code file")->required();
  k->add_option("--k", cnt_k, "Weight or comma-separated weights")->required();

  std::string deg_code;
  auto* d = app.add_subcommand("degrees", "Degree set of an invariant code");
  d->add_option("--code", deg_code, "Code file")->required();

  std::string prof_code;
  auto* p = app.add_subcommand("profile", "Nonzero weight range and bias of a code");
  p->add_option("--code", prof_code, "Code file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*b) return cmd_build(build, ctx);
    if (*f) return cmd_find_orbit(find, ctx);
    if (*v) return cmd_verify(v_cert, v_code, ctx);
    if (*t) return cmd_test(test, ctx);
    if (*s) return cmd_soundness(snd, ctx);
    if (*c) return cmd_charsum(cs_n, cs_poly, cs_eps, ctx);
    if (*k) return cmd_count(cnt_code, cnt_k, ctx);
    if (*d) return cmd_degrees(deg_code, ctx);
    if (*p) return cmd_profile(prof_code, ctx);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace orbitcode::cli

#endif  // ORBITCODE_TOOLS_COMMANDS_HPP
