#include "pathpairs/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pathpairs/errors.hpp"
#include "pathpairs/exact_math.hpp"
#include "pathpairs/formats.hpp"
#include "pathpairs/lattice.hpp"
#include "pathpairs/triangles.hpp"
#include "pathpairs/verifier.hpp"

namespace pathpairs::cli {

namespace {

const std::map<std::string, TriangleMethod> kTriangleMethods{
    {"recursive", TriangleMethod::recursive},
    {"formula", TriangleMethod::closed_form},
    {"riordan", TriangleMethod::riordan}};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report_exit(const VerificationReport& report, std::ostream& out) {
  out << report_to_json(report).dump(2) << '\n';
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

struct Options {
  int k = 2;
  int n = 1;
  int delta = 1;
  int epsilon = 0;
  int rows = 5;
  int returns = 0;
  int power = 1;
  int order = 10;
  int max_n = 6;
  int budget = 500;
  bool weak = false;
  std::string method = "formula";
  std::string count_method = "formula";
  std::string format = "csv";
  std::string suite;
  std::string golden;
  std::string allowlist;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and cross-verification of generalized k-path pairs", "pathpairs"};
  app.require_subcommand(1);
  Options o;

  auto* triangle = app.add_subcommand("triangle", "Emit rows of the (k, epsilon)-Catalan triangle");
  triangle->add_option("--k", o.k)->required();
  triangle->add_option("--epsilon", o.epsilon)->required();
  triangle->add_option("--rows", o.rows)->required();
  triangle->add_option("--method", o.method)->check(CLI::IsMember({"recursive", "formula", "riordan"}));
  triangle->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* count = app.add_subcommand("count", "Count strict k-path pairs");
  count->add_option("--k", o.k)->required();
  count->add_option("--n", o.n)->required();
  count->add_option("--delta", o.delta)->required();
  count->add_option("--epsilon", o.epsilon)->required();
  count->add_option("--method", o.count_method)->check(CLI::IsMember({"oracle", "formula"}));

  auto* weak = app.add_subcommand("weak", "Count weak k-path pairs with a given number of returns");
  weak->add_option("--k", o.k)->required();
  weak->add_option("--n", o.n)->required();
  weak->add_option("--delta", o.delta)->required();
  weak->add_option("--epsilon", o.epsilon)->required();
  weak->add_option("--returns", o.returns)->required();
  weak->add_option("--method", o.count_method)->check(CLI::IsMember({"oracle", "formula"}));

  auto* enumerate = app.add_subcommand("enumerate", "List k-path pairs, one 'upper/lower' per line");
  enumerate->add_option("--k", o.k)->required();
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--delta", o.delta)->required();
  enumerate->add_option("--epsilon", o.epsilon)->required();
  enumerate->add_flag("--weak", o.weak);
  auto* enum_returns = enumerate->add_option("--returns", o.returns);

  auto* series = app.add_subcommand("series", "Coefficients of C_k(t)^power as JSON");
  series->add_option("--k", o.k)->required();
  series->add_option("--power", o.power);
  series->add_option("--order", o.order)->required();

  auto* az = app.add_subcommand("az", "A- and Z-sequence polynomials as JSON");
  az->add_option("--k", o.k)->required();
  az->add_option("--epsilon", o.epsilon)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"strict", "weak", "identities"}));
  verify->add_option("--k", o.k);
  verify->add_option("--epsilon", o.epsilon);
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--golden", o.golden, "Golden triangle CSV to diff against (strict suite)");
  verify->add_option("--allowlist", o.allowlist, "Known-discrepancy allowlist (weak suite)");
  verify->add_option("--order", o.order, "Series order for the identities suite")->default_val(16);
  verify->add_option("--budget", o.budget, "Query-grid budget for the identities suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*triangle) {
      const Triangle tri = build_triangle(kTriangleMethods.at(o.method), o.k, o.epsilon, o.rows);
      if (o.format == "csv") {
        out << triangle_to_csv(tri);
      } else {
        out << triangle_to_json(tri).dump() << '\n';
      }
      return kExitOk;
    }
    if (*count) {
      const StrictQuery q(o.k, o.n, o.delta, o.epsilon);
      if (o.count_method == "oracle") {
        const std::size_t c =
            (o.k - 1) * o.n < o.epsilon ? 0 : enumerate_strict(o.k, o.n, o.delta, o.epsilon).size();
        out << c << '\n';
      } else {
        out << strict_count(q) << '\n';
      }
      return kExitOk;
    }
    if (*weak) {
      if (o.count_method == "oracle") {
        out << enumerate_weak(o.k, o.n, o.delta, o.epsilon, o.returns).size() << '\n';
      } else {
        out << weak_count_formula(o.k, o.n, o.delta, o.epsilon, o.returns) << '\n';
      }
      return kExitOk;
    }
    if (*enumerate) {
      std::optional<int> returns;
      if (enum_returns->count() > 0) {
        if (!o.weak) throw PreconditionError("--returns requires --weak");
        returns = o.returns;
      }
      const auto pairs = o.weak ? enumerate_weak(o.k, o.n, o.delta, o.epsilon, returns)
                                : enumerate_strict(o.k, o.n, o.delta, o.epsilon);
      for (const auto& p : pairs) out << p.str() << '\n';
      return kExitOk;
    }
    if (*series) {
      out << series_to_json(series_power(kcatalan_series(o.k, o.order), o.power)).dump() << '\n';
      return kExitOk;
    }
    if (*az) {
      const AZPair p = az_polynomials(o.k, o.epsilon);
      out << nlohmann::json{{"A", series_to_json(p.a)}, {"Z", series_to_json(p.z)}}.dump() << '\n';
      return kExitOk;
    }
    if (*verify) {
      if (o.suite == "strict") {
        VerificationReport report = cross_check_strict(o.k, o.epsilon, o.max_n);
        if (!o.golden.empty()) {
          const std::string text = read_file(o.golden);
          const int rows = static_cast<int>(triangle_rows_from_csv(text).size());
          std::vector<TriangleMethod> methods{TriangleMethod::closed_form};
          if (o.epsilon <= o.k - 1) {
            methods.push_back(TriangleMethod::recursive);
            methods.push_back(TriangleMethod::riordan);
          }
          for (TriangleMethod m : methods) {
            report.absorb(check_golden(build_triangle(m, o.k, o.epsilon, rows), text));
          }
          report.finalize();
        }
        return report_exit(report, out);
      }
      if (o.suite == "weak") {
        const Allowlist allowlist = Allowlist::load(
            o.allowlist.empty() ? default_data_dir() / "weak_allowlist.json" : std::filesystem::path(o.allowlist));
        return report_exit(cross_check_weak(o.k, o.max_n, allowlist), out);
      }
      return report_exit(identity_suite(o.order, o.budget), out);
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SplitError& e) {
    err << "split error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace pathpairs::cli
