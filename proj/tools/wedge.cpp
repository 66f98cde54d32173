#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wedge/construction.hpp"
#include "wedge/error.hpp"
#include "wedge/geometry.hpp"
#include "wedge/json_io.hpp"
#include "wedge/proofs.hpp"
#include "wedge/quad.hpp"
#include "wedge/sexagesimal.hpp"
#include "wedge/svg.hpp"

// Exit codes: 0 all checks pass, 1 verification/assertion failure,
// 2 usage/parse/domain error.

namespace {

using namespace wedge;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot write '" + path + "'");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BigRational side_or_default(const std::string& side_text, long fallback) {
  if (side_text.empty()) return BigRational(fallback);
  return BigRational::parse(side_text);
}

void print_figure_stats(const Figure& fig) {
  if (fig.triangles.empty()) return;
  std::vector<BigRational> areas;
  for (const NamedTriangle& t : fig.triangles)
    areas.push_back(polygon_area({fig.point(t.vertices[0]),
                                  fig.point(t.vertices[1]),
                                  fig.point(t.vertices[2])}));
  bool all_equal = true;
  for (const BigRational& a : areas)
    if (!(a == areas[0])) all_equal = false;
  if (all_equal) {
    std::cout << "T = " << areas[0] << "\n";
  } else {
    for (std::size_t i = 0; i < areas.size(); ++i)
      std::cout << "area(" << fig.triangles[i].name << ") = " << areas[i] << "\n";
  }
}

struct ConstructArgs {
  std::string script_path;
  std::string builtin;
  std::string side;
  std::string svg_path;
  std::string json_path;
  bool shade = false;
};

int run_construct(const ConstructArgs& args) {
  std::string text;
  BigRational side(1);
  if (!args.builtin.empty()) {
    const auto& scripts = builtin_scripts();
    auto it = scripts.find(args.builtin);
    if (it == scripts.end())
      throw domain_error("unknown builtin script '" + args.builtin + "'");
    text = it->second;
    side = side_or_default(args.side, args.builtin == "ybc7289" ? 30 : 60);
  } else {
    text = read_file(args.script_path);
    side = side_or_default(args.side, 1);
  }

  Script script = parse_script(substitute_side(text, side));
  ExecutionResult result = execute(script);

  print_figure_stats(result.figure);
  for (const AssertionResult& a : result.assertions)
    std::cout << a.description << ": expected " << a.expected << ", actual "
              << a.actual << (a.passed ? "" : " -> FAIL") << "\n";

  if (!args.svg_path.empty())
    write_file(args.svg_path, render_svg(result.figure, {.shade = args.shade}));
  if (!args.json_path.empty())
    write_file(args.json_path, figure_to_json(result.figure));
  return result.all_passed() ? kOk : kCheckFailed;
}

int run_verify_bm15285(const BigRational& side) {
  Figure fig = build_bm15285_figure(side);
  try {
    VerificationReport report = verify_problem_xii(fig);
    for (const IdentityResult& id : report.identities)
      std::cout << id.name << ": " << id.lhs << " = " << id.rhs << " : pass\n";
    std::cout << "verify bm15285 (side " << side << "): PASS\n";
    return kOk;
  } catch (const verification_error& e) {
    std::cout << e.identity() << ": " << e.lhs() << " != " << e.rhs()
              << " : FAIL\n";
    std::cout << "verify bm15285 (side " << side << "): FAIL\n";
    return kCheckFailed;
  }
}

int run_verify_ybc7289(const BigRational& side) {
  Figure fig = build_ybc7289_figure(side);
  std::vector<IdentityResult> checks;

  BigRational diag_sq = sq_dist(fig.point("B"), fig.point("D"));
  BigRational expected = BigRational(2) * side * side;
  checks.push_back({"diag_sq = 2 side^2", diag_sq.str(), expected.str(),
                    diag_sq == expected});

  SexValue best = best_sex_approx(2, 3);
  checks.push_back({"best_sex_approx(2, 3)", format_sex(best), "1;24,51,10",
                    format_sex(best) == "1;24,51,10"});

  SexValue recip = best_sex_approx_recip(2, 3);
  checks.push_back({"best_sex_approx_recip(2, 3)", format_sex(recip),
                    "0;42,25,35", format_sex(recip) == "0;42,25,35"});

  SexValue scaled = sex_scale(best, 30, 3);
  checks.push_back({"30 * 1;24,51,10", format_sex(scaled), "42;25,35",
                    format_sex(scaled) == "42;25,35"});

  QuadValue root2 = QuadValue::sqrt_of(2);
  QuadValue approx = QuadValue::from_rational(sex_to_rational(best), 2);
  QuadValue diff = root2 - approx;
  QuadValue abs_diff = sign(diff) < 0 ? -diff : diff;
  QuadValue bound = QuadValue::from_rational(
      BigRational(mpz_class(1), mpz_class(1000000)), 2);
  bool within = sign(bound - abs_diff) > 0;
  checks.push_back({"|1;24,51,10 - sqrt(2)| < 10^-6",
                    approx_decimal(abs_diff, 9), "0.000001000", within});

  bool all = true;
  for (const IdentityResult& c : checks) {
    std::cout << c.name << ": " << c.lhs << (c.holds ? " : pass" : " : FAIL (expected ")
              << (c.holds ? "" : c.rhs + ")") << "\n";
    all = all && c.holds;
  }
  std::cout << "verify ybc7289 (side " << side << "): " << (all ? "PASS" : "FAIL")
            << "\n";
  return all ? kOk : kCheckFailed;
}

int run_prove(unsigned long long n, unsigned long long bound,
              const std::string& json_path) {
  IrrationalityCertificate cert = decide_sqrt_rational(n, bound);
  std::string json = certificate_to_json(cert);
  std::cout << json;
  if (!json_path.empty()) write_file(json_path, json);
  return kOk;
}

int run_sex_parse(const std::string& text) {
  SexValue v = parse_sex(text);
  auto [num, den] = sex_raw_fraction(v);
  BigRational reduced = sex_to_rational(v);
  std::string raw = num.get_str();
  if (den != 1) raw += "/" + den.get_str();
  std::cout << format_sex(v) << " = " << raw;
  if (raw != reduced.str()) std::cout << " = " << reduced;
  std::cout << "\n";
  return kOk;
}

void print_approx_line(const std::string& label, const QuadValue& target,
                       const SexValue& approx) {
  QuadValue value = QuadValue::from_rational(sex_to_rational(approx), target.d());
  QuadValue err = target - value;
  int sg = sign(err);
  QuadValue abs_err = sg < 0 ? -err : err;
  std::cout << label << " ~ " << format_sex(approx) << " = "
            << sex_to_rational(approx) << ", error "
            << (sg < 0 ? "-" : "+") << approx_decimal(abs_err, 12) << "\n";
}

int run_sex_approx(unsigned long long n, int digits) {
  if (n > 1000000000000ULL)
    throw domain_error("radicand too large: " + std::to_string(n));
  SexValue best = best_sex_approx(n, digits);
  SexValue recip = best_sex_approx_recip(n, digits);
  long d = static_cast<long>(n);
  QuadValue root = QuadValue::sqrt_of(d);
  QuadValue root_recip = QuadValue(0, BigRational(mpz_class(1), mpz_class(d)), d);
  print_approx_line("sqrt(" + std::to_string(n) + ")", root, best);
  print_approx_line("1/sqrt(" + std::to_string(n) + ")", root_recip, recip);
  return kOk;
}

int run_sex_heron(unsigned long long n, const std::string& x0_text, int digits) {
  SexValue x0 = parse_sex(x0_text);
  HeronResult result = heron_sqrt_sex(n, x0, digits);
  for (std::size_t i = 0; i < result.iterates.size(); ++i)
    std::cout << "x" << i << " = " << format_sex(result.iterates[i]) << "\n";
  if (result.converged)
    std::cout << "fixed point after " << result.iterates.size() - 1
              << " iteration(s)\n";
  else
    std::cout << "no fixed point within iteration limit\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction, verification and proof tool for the "
               "BM 15285 / YBC 7289 square figures"};
  app.require_subcommand(1);
  int rc = kOk;

  // construct
  ConstructArgs cons;
  CLI::App* construct = app.add_subcommand(
      "construct", "run a construction script and emit figure outputs");
  construct->add_option("script", cons.script_path, "path to a .ct script");
  construct->add_option("--builtin", cons.builtin, "bundled script name");
  construct->add_option("--side", cons.side, "square side as a rational");
  construct->add_option("--svg", cons.svg_path, "write an SVG rendering");
  construct->add_option("--json", cons.json_path, "write the figure JSON");
  construct->add_flag("--shade", cons.shade, "two-color checker over the wedges");
  construct->callback([&] {
    if (cons.builtin.empty() == cons.script_path.empty())
      throw CLI::ValidationError("construct",
                                 "need exactly one of <script> or --builtin");
    rc = run_construct(cons);
  });

  // verify
  std::string verify_tablet, verify_side;
  CLI::App* verify = app.add_subcommand("verify", "check the tablet claims");
  verify->add_option("tablet", verify_tablet, "bm15285 or ybc7289")
      ->required()
      ->check(CLI::IsMember({"bm15285", "ybc7289"}));
  verify->add_option("--side", verify_side, "square side as a rational");
  verify->callback([&] {
    if (verify_tablet == "bm15285")
      rc = run_verify_bm15285(side_or_default(verify_side, 60));
    else
      rc = run_verify_ybc7289(side_or_default(verify_side, 30));
  });

  // prove
  unsigned long long prove_n = 0, prove_bound = 10000;
  std::string prove_json;
  CLI::App* prove = app.add_subcommand(
      "prove", "decide rationality of sqrt(n) and emit a certificate");
  prove->add_option("n", prove_n, "radicand")->required()
      ->check(CLI::PositiveNumber);
  prove->add_option("--bound", prove_bound, "exhaustive scan bound")
      ->check(CLI::PositiveNumber);
  prove->add_option("--json", prove_json, "write the certificate JSON");
  prove->callback([&] { rc = run_prove(prove_n, prove_bound, prove_json); });

  // sex
  CLI::App* sex = app.add_subcommand("sex", "base-60 numeral utilities");
  sex->require_subcommand(1);

  std::string sex_text;
  CLI::App* sex_parse_cmd = sex->add_subcommand("parse", "echo canonical form and exact value");
  sex_parse_cmd->add_option("numeral", sex_text, "sexagesimal numeral")->required();
  sex_parse_cmd->callback([&] { rc = run_sex_parse(sex_text); });

  unsigned long long sex_n = 0;
  int sex_digits = 3;
  CLI::App* sex_approx_cmd = sex->add_subcommand(
      "approx", "best base-60 approximations of sqrt(n) and 1/sqrt(n)");
  sex_approx_cmd->add_option("n", sex_n, "radicand")->required()
      ->check(CLI::PositiveNumber);
  sex_approx_cmd->add_option("--digits", sex_digits, "fractional digit count");
  sex_approx_cmd->callback([&] { rc = run_sex_approx(sex_n, sex_digits); });

  unsigned long long heron_n = 0;
  std::string heron_x0;
  int heron_digits = 3;
  CLI::App* sex_heron_cmd = sex->add_subcommand(
      "heron", "rounded Heron iteration toward sqrt(n)");
  sex_heron_cmd->add_option("n", heron_n, "radicand")->required()
      ->check(CLI::PositiveNumber);
  sex_heron_cmd->add_option("--x0", heron_x0, "starting numeral")->required();
  sex_heron_cmd->add_option("--digits", heron_digits, "fractional digit count");
  sex_heron_cmd->callback([&] { rc = run_sex_heron(heron_n, heron_x0, heron_digits); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const wedge::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
