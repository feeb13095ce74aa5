#include "jacobsthal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <string_view>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "jacobsthal/charsums.hpp"
#include "jacobsthal/curves.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/quadforms.hpp"
#include "jacobsthal/verify.hpp"

namespace jacobsthal {

namespace {

enum class Format { Tsv, Json };

struct Field {
  std::string name;
  std::variant<int64_t, uint64_t, bool, std::string> value;
  bool keyed_in_tsv = false;  // print as name=value
};

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const std::vector<Field>& fields) {
    if (format_ == Format::Json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& f : fields) {
        std::visit([&](const auto& v) { j[f.name] = v; }, f.value);
      }
      out_ << j.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& f : fields) {
      if (!first) out_ << '\t';
      first = false;
      if (f.keyed_in_tsv) out_ << f.name << '=';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
              out_ << (v ? "true" : "false");
            } else {
              out_ << v;
            }
          },
          f.value);
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
};

std::vector<int64_t> parse_polynomial(const std::string& text) {
  std::vector<int64_t> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token(text.data() + start,
                           (comma == std::string::npos ? text.size() : comma) - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(Errc::InvalidArgument, "malformed polynomial coefficient '" + std::string(token) + "'");
    }
    coeffs.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coeffs;
}

unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnvVar)) {
    unsigned v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return 1;
}

std::string i_power_name(int e) {
  static const char* names[] = {"1", "i", "-1", "-i"};
  return names[e & 3];
}

struct Options {
  std::string format = "tsv";
  uint64_t prime = 0;
  std::string poly;
  int d = 0;
  bool cubic = false;
  std::string theorem;
  uint64_t from = 3;
  uint64_t to = 0;
  unsigned jobs = 1;
  std::string records = "failures";
  std::string curve;
  int k = 0;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output encoding")->check(CLI::IsMember({"tsv", "json"}));
}

std::vector<Field> report_fields(const VerifyReport& r) {
  std::vector<Field> fields{{"prime", r.p.value()},
                            {"theorem", std::string(to_string(r.theorem))},
                            {"holds", r.holds}};
  for (const auto& v : r.values) fields.push_back({v.name, v.value, true});
  fields.push_back({"detail", r.detail.empty() ? std::string("-") : r.detail});
  return fields;
}

std::vector<Field> summary_fields(const RangeSummary& s) {
  return {{"record", std::string("summary")},
          {"theorem", std::string(to_string(s.theorem))},
          {"lo", s.lo},
          {"hi", s.hi},
          {"tested", s.tested},
          {"passed", s.passed},
          {"failed", s.tested - s.passed}};
}

int run_scan(const std::vector<Theorem>& theorems, const Options& o, bool emit_all, RecordWriter& w) {
  ScanOptions scan;
  scan.jobs = o.jobs;
  bool failed = false;
  auto summaries = scan_range(o.from, o.to, theorems, scan, [&](const VerifyReport& r) {
    if (!r.holds) failed = true;
    if (emit_all || !r.holds) w.write(report_fields(r));
  });
  for (const auto& s : summaries) w.write(summary_fields(s));
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobsthal sums, prime representations and CM curve local factors", "jacobsthal"};
  app.require_subcommand(1);
  Options o;
  o.jobs = default_jobs();

  auto* sum = app.add_subcommand("sum", "Raw Jacobsthal sum of a polynomial");
  sum->add_option("--poly", o.poly, "Coefficients c0,c1,...,cd from the constant term up")->required();
  sum->add_option("--prime", o.prime, "Odd prime")->required();
  add_format(sum, o);

  auto* repr = app.add_subcommand("repr", "Representation p = a^2 + Db^2 or 3p = A^2 + AB + B^2");
  repr->add_option("--prime", o.prime, "Odd prime")->required();
  auto* d_opt = repr->add_option("--d", o.d, "D in p = a^2 + Db^2")->check(CLI::IsMember({1, 2}));
  auto* cubic_flag = repr->add_flag("--cubic", o.cubic, "3p = A^2 + AB + B^2");
  d_opt->excludes(cubic_flag);
  add_format(repr, o);

  auto* verify = app.add_subcommand("verify", "Check a theorem over a prime range");
  verify->add_option("theorem", o.theorem, "main|classical|cubic|signs|all")
      ->required()
      ->check(CLI::IsMember({"main", "classical", "cubic", "signs", "all"}));
  verify->add_option("--from", o.from, "Lower bound (inclusive)")->required();
  verify->add_option("--to", o.to, "Upper bound (inclusive)")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads (default $JACOBSTHAL_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--records", o.records, "Emit failures only or every record")
      ->check(CLI::IsMember({"failures", "all"}));
  add_format(verify, o);

  auto* lfactor = app.add_subcommand("lfactor", "Local factor coefficients c1..c2g from point counts");
  lfactor->add_option("--curve", o.curve, "e1|e2|x1|x2")
      ->required()
      ->check(CLI::IsMember({"e1", "e2", "x1", "x2"}));
  lfactor->add_option("--prime", o.prime, "Odd prime")->required();
  add_format(lfactor, o);

  auto* chi = app.add_subcommand("chi", "Quartic Kummer character chi_k at a prime of degree two");
  chi->add_option("--prime", o.prime, "Odd prime, not 1 mod 8")->required();
  chi->add_option("--k", o.k, "0..3")->required()->check(CLI::Range(0, 3));
  add_format(chi, o);

  auto* trace = app.add_subcommand("trace-check", "x^5 + x against the two sqrt(-2) curves, per prime");
  trace->add_option("--from", o.from, "Lower bound (inclusive)")->required();
  trace->add_option("--to", o.to, "Upper bound (inclusive)")->required();
  trace->add_option("--jobs", o.jobs, "Worker threads (default $JACOBSTHAL_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  add_format(trace, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  RecordWriter w(out, o.format == "json" ? Format::Json : Format::Tsv);
  try {
    if (sum->parsed()) {
      const OddPrime p(o.prime);
      const auto coeffs = parse_polynomial(o.poly);
      const SumResult r = jacobsthal_sum(coeffs, p);
      w.write({{"prime", p.value()}, {"raw_sum", r.raw_sum}});
      return kExitOk;
    }
    if (repr->parsed()) {
      const OddPrime p(o.prime);
      if (o.cubic) {
        const CubicRep rep = cubic_rep(p);
        w.write({{"prime", p.value()}, {"A", rep.A}, {"B", rep.B}});
      } else {
        if (o.d == 0) throw Error(Errc::InvalidArgument, "repr needs --d 1, --d 2 or --cubic");
        const QuadRep rep = cornacchia(p, o.d);
        w.write({{"prime", p.value()}, {"a", rep.a}, {"b", rep.b}});
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      std::vector<Theorem> theorems;
      if (o.theorem == "all") {
        theorems = {Theorem::Main, Theorem::Classical, Theorem::Cubic, Theorem::Signs};
      } else {
        theorems = {*theorem_from_string(o.theorem)};
      }
      return run_scan(theorems, o, o.records == "all", w);
    }
    if (lfactor->parsed()) {
      const OddPrime p(o.prime);
      static const std::pair<const char*, CurveId> names[] = {
          {"e1", CurveId::E1}, {"e2", CurveId::E2}, {"x1", CurveId::X1}, {"x2", CurveId::X2}};
      CurveId id = CurveId::E1;
      for (const auto& [n, c] : names) {
        if (o.curve == n) id = c;
      }
      const LocalFactor lf = local_factor(HyperellipticModel::named(id), p);
      std::vector<Field> fields{{"prime", p.value()}};
      for (int i = 1; i <= 2 * lf.genus; ++i) fields.push_back({"c" + std::to_string(i), lf.c(i)});
      w.write(fields);
      return kExitOk;
    }
    if (chi->parsed()) {
      const OddPrime p(o.prime);
      const KummerValue v = kummer_character(p, o.k);
      w.write({{"prime", p.value()},
               {"k", static_cast<int64_t>(v.k)},
               {"j", static_cast<int64_t>(v.artin_exponent)},
               {"exponent", static_cast<int64_t>(v.exponent)},
               {"value", i_power_name(v.exponent)}});
      return kExitOk;
    }
    if (trace->parsed()) {
      return run_scan({Theorem::Trace}, o, true, w);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_falsification(e.code()) ? kExitCheckFailed : kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace jacobsthal
