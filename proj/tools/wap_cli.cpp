// Command-line front end. Talks to the library only through wap.h.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wap/wap.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_of(wap_status s) {
  switch (s) {
    case WAP_OK: return 0;
    case WAP_ERR_PARSE:
    case WAP_ERR_INVALID_ARGUMENT: return kExitUsage;
    case WAP_ERR_SIZE_LIMIT: return kExitSize;
    case WAP_ERR_INTERNAL: return kExitInternal;
    default: return kExitIo;
  }
}

void check(wap_status s) {
  if (s != WAP_OK) throw Failure{exit_code_of(s), wap_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* ptr) const { Free(ptr); }
};
using Partition = std::unique_ptr<wap_partition, Deleter<wap_partition, wap_partition_free>>;
using Quotient = std::unique_ptr<wap_quotient, Deleter<wap_quotient, wap_quotient_free>>;
using Charvec = std::unique_ptr<wap_charvec, Deleter<wap_charvec, wap_charvec_free>>;
using Decomposition = std::unique_ptr<wap_decomposition, Deleter<wap_decomposition, wap_decomposition_free>>;
using Poly = std::unique_ptr<wap_poly, Deleter<wap_poly, wap_poly_free>>;
using Report = std::unique_ptr<wap_report, Deleter<wap_report, wap_report_free>>;

// Takes ownership of a library-allocated string.
template <class Fn, class... Args>
std::string fetch(Fn fn, Args... args) {
  char* raw = nullptr;
  check(fn(args..., &raw));
  std::string out(raw);
  wap_string_free(raw);
  return out;
}

Partition parse_partition(const std::string& text) {
  wap_partition* raw = nullptr;
  check(wap_partition_parse(text.c_str(), &raw));
  return Partition(raw);
}

Quotient parse_quotient(const std::string& text) {
  wap_quotient* raw = nullptr;
  check(wap_quotient_parse(text.c_str(), &raw));
  return Quotient(raw);
}

Charvec parse_charvec(const std::string& text) {
  wap_charvec* raw = nullptr;
  check(wap_charvec_parse(text.c_str(), &raw));
  return Charvec(raw);
}

std::string format_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string pretty_partition(const std::string& s) { return s.empty() ? "∅" : s; }

std::string pretty_quotient(const std::string& s) {
  std::string out;
  std::size_t start = 0;
  for (;;) {
    const auto end = s.find(';', start);
    out += pretty_partition(s.substr(start, end - start));
    if (end == std::string::npos) return out;
    out += ';';
    start = end + 1;
  }
}

// One output record: a JSON value plus its human rendering.
struct Field {
  std::string key;
  json value;
  std::string text;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void emit(const std::vector<Field>& fields, const std::string& format) {
  if (format == "json") {
    json doc = json::object();
    for (const auto& f : fields) doc[f.key] = f.value;
    std::cout << doc.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "field,value\n";
    for (const auto& f : fields)
      std::cout << f.key << ',' << csv_cell(f.value.is_string() ? f.value.get<std::string>() : f.value.dump()) << '\n';
  } else {
    for (const auto& f : fields) std::cout << f.key << ": " << f.text << '\n';
  }
}

Field plain(const std::string& key, const std::string& value) { return {key, value, value}; }
Field number(const std::string& key, std::int64_t value) { return {key, value, std::to_string(value)}; }

std::vector<std::string> poly_coeffs(const wap_poly* poly) {
  return json::parse(fetch(wap_poly_json, poly)).get<std::vector<std::string>>();
}

Field poly_field(const std::string& key, const wap_poly* poly) {
  return {key, poly_coeffs(poly), fetch(wap_poly_human, poly)};
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

void check_p(std::optional<std::size_t> p, std::size_t actual, const char* what) {
  if (p && *p != actual)
    usage("-p " + std::to_string(*p) + " does not match the " + what + " length " + std::to_string(actual));
}

struct Options {
  std::optional<std::size_t> p;
  std::optional<std::string> partition;
  std::optional<std::string> quotient;
  std::optional<std::string> charvec;
  std::vector<double> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> k;
  std::string method = "formula";
  std::string format = "text";
  std::string out;
  double tol = 1e-9;
  std::size_t max_degree = 400;
  bool explain = false;
};

wap_method method_of(const std::string& name) {
  if (name == "wronskian") return WAP_METHOD_WRONSKIAN;
  if (name == "both") return WAP_METHOD_BOTH;
  return WAP_METHOD_FORMULA;
}

std::size_t require_p(const Options& o) {
  if (!o.p) usage("-p is required");
  if (*o.p < 1) usage("-p must be a positive integer");
  return *o.p;
}

int cmd_decompose(const Options& o) {
  const std::size_t p = require_p(o);
  auto lambda = parse_partition(o.partition.value_or(""));
  wap_decomposition* raw = nullptr;
  check(wap_decompose(lambda.get(), p, &raw));
  Decomposition d(raw);

  wap_partition* core_raw = nullptr;
  check(wap_decomposition_core(d.get(), &core_raw));
  Partition core(core_raw);
  wap_quotient* mu_raw = nullptr;
  check(wap_decomposition_quotient(d.get(), &mu_raw));
  Quotient mu(mu_raw);
  wap_charvec* c_raw = nullptr;
  check(wap_decomposition_charvec(d.get(), &c_raw));
  Charvec c(c_raw);

  const auto lambda_text = fetch(wap_partition_to_string, lambda.get());
  const auto core_text = fetch(wap_partition_to_string, core.get());
  const auto mu_text = fetch(wap_quotient_to_string, mu.get());
  const std::int64_t size = wap_partition_size(lambda.get());
  const std::int64_t by_formula = wap_decomposition_core_size_formula(d.get());
  const std::int64_t by_strips = wap_decomposition_core_size_strips(d.get());
  const std::int64_t mu_size = wap_quotient_size(mu.get());
  const bool sizes_ok = by_formula == by_strips && size == by_formula + static_cast<std::int64_t>(p) * mu_size;

  std::vector<Field> fields{
      {"partition", lambda_text, pretty_partition(lambda_text)},
      number("p", static_cast<std::int64_t>(p)),
      {"core", core_text, pretty_partition(core_text)},
      number("core_size_formula", by_formula),
      number("core_size_strips", by_strips),
      plain("charvec", fetch(wap_charvec_to_string, c.get())),
      {"quotient", mu_text, pretty_quotient(mu_text)},
      number("quotient_size", mu_size),
      plain("degree_vector", fetch(wap_partition_degree_vector, lambda.get())),
      {"size_check", sizes_ok,
       std::to_string(size) + " = " + std::to_string(by_formula) + " + " + std::to_string(p) + "*" +
           std::to_string(mu_size) + (sizes_ok ? " ok" : " FAILED")},
  };
  if (o.explain) {
    const auto text = fetch(wap_decomposition_explain, d.get());
    fields.push_back({"maya", text, "\n" + text.substr(0, text.size() - 1)});
  }
  emit(fields, o.format);
  return sizes_ok ? 0 : kExitInternal;
}

int cmd_compose(const Options& o) {
  if (!o.quotient || !o.charvec) usage("compose needs --quotient and --charvec");
  auto mu = parse_quotient(*o.quotient);
  auto c = parse_charvec(*o.charvec);
  check_p(o.p, wap_quotient_p(mu.get()), "quotient");
  wap_partition* raw = nullptr;
  check(wap_compose(mu.get(), c.get(), &raw));
  Partition lambda(raw);
  const auto text = fetch(wap_partition_to_string, lambda.get());
  std::vector<Field> fields{
      {"partition", text, pretty_partition(text)},
      number("size", wap_partition_size(lambda.get())),
  };
  if (o.explain) {
    wap_decomposition* d_raw = nullptr;
    check(wap_decompose(lambda.get(), wap_quotient_p(mu.get()), &d_raw));
    Decomposition d(d_raw);
    const auto maya = fetch(wap_decomposition_explain, d.get());
    fields.push_back({"maya", maya, "\n" + maya.substr(0, maya.size() - 1)});
  }
  emit(fields, o.format);
  return 0;
}

int cmd_core(const Options& o) {
  if (!o.charvec) usage("core needs --charvec");
  auto c = parse_charvec(*o.charvec);
  check_p(o.p, wap_charvec_p(c.get()), "characteristic vector");
  wap_partition* raw = nullptr;
  check(wap_core_from_charvec(c.get(), &raw));
  Partition core(raw);
  const auto text = fetch(wap_partition_to_string, core.get());
  emit({{"core", text, pretty_partition(text)},
        number("core_size", wap_partition_size(core.get())),
        number("core_size_formula", wap_core_size_from_charvec(c.get()))},
       o.format);
  return 0;
}

int cmd_poly(const Options& o) {
  const std::size_t p = require_p(o);
  auto lambda = parse_partition(o.partition.value_or(""));
  wap_poly* q_raw = nullptr;
  check(wap_q_lambda(lambda.get(), p, o.max_degree, &q_raw));
  Poly q(q_raw);
  wap_poly* r_raw = nullptr;
  check(wap_r_lambda(lambda.get(), p, o.max_degree, &r_raw));
  Poly r(r_raw);
  wap_decomposition* d_raw = nullptr;
  check(wap_decompose(lambda.get(), p, &d_raw));
  Decomposition d(d_raw);
  const auto text = fetch(wap_partition_to_string, lambda.get());
  emit({{"partition", text, pretty_partition(text)},
        number("p", static_cast<std::int64_t>(p)),
        poly_field("q", q.get()),
        number("core_size", wap_decomposition_core_size_formula(d.get())),
        poly_field("R", r.get())},
       o.format);
  return 0;
}

int cmd_coeffs(const Options& o) {
  const bool by_partition = o.partition.has_value();
  if (by_partition == (o.quotient || o.charvec))
    usage("give either a partition or --quotient with --charvec, not both");
  Quotient mu;
  Charvec c;
  std::string lambda_text;
  if (by_partition) {
    const std::size_t p = require_p(o);
    auto lambda = parse_partition(*o.partition);
    wap_decomposition* d_raw = nullptr;
    check(wap_decompose(lambda.get(), p, &d_raw));
    Decomposition d(d_raw);
    wap_quotient* mu_raw = nullptr;
    check(wap_decomposition_quotient(d.get(), &mu_raw));
    mu.reset(mu_raw);
    wap_charvec* c_raw = nullptr;
    check(wap_decomposition_charvec(d.get(), &c_raw));
    c.reset(c_raw);
    lambda_text = fetch(wap_partition_to_string, lambda.get());
  } else {
    if (!o.quotient || !o.charvec) usage("--quotient and --charvec go together");
    mu = parse_quotient(*o.quotient);
    c = parse_charvec(*o.charvec);
    check_p(o.p, wap_quotient_p(mu.get()), "quotient");
    wap_partition* raw = nullptr;
    check(wap_compose(mu.get(), c.get(), &raw));
    Partition lambda(raw);
    lambda_text = fetch(wap_partition_to_string, lambda.get());
  }
  wap_poly* r_raw = nullptr;
  check(wap_r_by_method(mu.get(), c.get(), method_of(o.method), o.max_degree, &r_raw));
  Poly r(r_raw);

  auto coeffs = poly_coeffs(r.get());
  std::vector<std::string> rj(coeffs.rbegin(), coeffs.rend());
  if (o.format == "csv") {
    std::cout << "j,r_j\n";
    for (std::size_t j = 0; j < rj.size(); ++j) std::cout << j << ',' << rj[j] << '\n';
    return 0;
  }
  const auto mu_text = fetch(wap_quotient_to_string, mu.get());
  emit({{"partition", lambda_text, pretty_partition(lambda_text)},
        {"quotient", mu_text, pretty_quotient(mu_text)},
        plain("charvec", fetch(wap_charvec_to_string, c.get())),
        plain("method", o.method),
        {"r", rj, join(rj)},
        poly_field("R", r.get())},
       o.format);
  return 0;
}

std::string human_real_poly(const std::vector<double>& top_down) {
  // top_down[j] is the coefficient of x^{n-j}.
  const std::size_t n = top_down.size() - 1;
  std::string out;
  for (std::size_t j = 0; j <= n; ++j) {
    const double c = top_down[j];
    if (c == 0) continue;
    const std::size_t d = n - j;
    const double mag = std::fabs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += format_double(mag);
    if (d > 0) out += std::string(unit ? "" : "*") + "x" + (d > 1 ? "^" + std::to_string(d) : "");
  }
  return out.empty() ? "0" : out;
}

int cmd_limit(const Options& o) {
  if (!o.quotient) usage("limit needs --quotient");
  auto mu = parse_quotient(*o.quotient);
  const std::size_t p = wap_quotient_p(mu.get());
  check_p(o.p, p, "quotient");
  if (o.a.size() != p) usage("--a needs exactly " + std::to_string(p) + " entries");

  std::vector<double> alphas(p);
  check(wap_attractors(o.a.data(), p, alphas.data()));
  const auto n = static_cast<std::size_t>(wap_quotient_size(mu.get()));

  bool integral = true;
  for (double v : o.a) integral = integral && std::nearbyint(v) == v && std::fabs(v) < 1e15;

  json limit_json = json::array();
  std::vector<std::string> limit_text;
  std::string poly_text;
  json poly_json;
  if (integral) {
    std::vector<std::int64_t> a(o.a.begin(), o.a.end());
    wap_poly* raw = nullptr;
    check(wap_limit_polynomial_exact(mu.get(), a.data(), p, &raw));
    Poly poly(raw);
    auto coeffs = poly_coeffs(poly.get());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      limit_json.push_back(*it);
      limit_text.push_back(*it);
    }
    poly_text = fetch(wap_poly_human, poly.get());
    poly_json = coeffs;
  } else {
    std::vector<double> l(n + 1);
    check(wap_limit_coefficients(mu.get(), o.a.data(), p, l.data()));
    for (double v : l) {
      limit_json.push_back(v);
      limit_text.push_back(format_double(v));
    }
    poly_text = human_real_poly(l);
    poly_json = json(std::vector<double>(l.rbegin(), l.rend()));
  }

  if (o.format == "csv") {
    std::cout << "j,L_j\n";
    for (std::size_t j = 0; j < limit_text.size(); ++j) std::cout << j << ',' << limit_text[j] << '\n';
    return 0;
  }
  std::vector<std::string> alpha_text;
  for (std::size_t i = 0; i < p; ++i) alpha_text.push_back(format_double(alphas[i]));
  const auto mu_text = fetch(wap_quotient_to_string, mu.get());
  emit({{"quotient", mu_text, pretty_quotient(mu_text)},
        {"a", o.a, join([&] {
           std::vector<std::string> v;
           for (double x : o.a) v.push_back(format_double(x));
           return v;
         }())},
        {"attractors", alphas, join(alpha_text)},
        {"L", limit_json, join(limit_text)},
        {"limit_polynomial", poly_json, poly_text}},
       o.format);
  return 0;
}

int cmd_sweep(const Options& o) {
  if (!o.quotient) usage("sweep needs --quotient");
  auto mu = parse_quotient(*o.quotient);
  const std::size_t p = wap_quotient_p(mu.get());
  check_p(o.p, p, "quotient");
  if (o.a.size() != p) usage("--a needs exactly " + std::to_string(p) + " entries");
  std::vector<std::int64_t> a;
  for (double v : o.a) {
    if (std::nearbyint(v) != v) usage("sweep needs integer growth rates");
    a.push_back(static_cast<std::int64_t>(v));
  }
  if (!o.b.empty() && o.b.size() != p) usage("--b needs exactly " + std::to_string(p) + " entries");
  if (o.k.empty()) usage("sweep needs --k");

  wap_sweep_options options{method_of(o.method), o.tol, o.max_degree};
  wap_report* raw = nullptr;
  check(wap_sweep(mu.get(), a.data(), o.b.empty() ? nullptr : o.b.data(), p, o.k.data(), o.k.size(), &options,
                  &raw));
  Report report(raw);

  std::string stdout_text;
  if (o.format == "json")
    stdout_text = fetch(wap_report_json, report.get());
  else if (o.format == "csv")
    stdout_text = fetch(wap_report_coefficients_csv, report.get());
  else
    stdout_text = fetch(wap_report_text, report.get());
  if (!o.out.empty()) check(wap_report_write(report.get(), o.out.c_str()));
  std::cout << stdout_text;
  return 0;
}

int cmd_selftest() {
  char* raw = nullptr;
  int passed = 0;
  check(wap_selftest(&raw, &passed));
  std::cout << raw;
  wap_string_free(raw);
  return passed ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Partition cores and quotients, Wronskian Appell polynomials and their zero asymptotics.\n"
      "Partitions are comma-separated parts (\"8,8,6,6,2,2,1\"); the empty string is the empty partition.\n"
      "Quotients separate components with ';' (\"1,1;4;2,1\"); an empty field is an empty component."};
  app.require_subcommand(1);
  Options o;

  auto add_p = [&](CLI::App* sub) { sub->add_option("-p", o.p, "Modulus p >= 1"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "wronskian, formula, or both (cross-check)")
        ->check(CLI::IsMember({"wronskian", "formula", "both"}));
  };
  auto add_max_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "Largest |lambda| the Wronskian path accepts");
  };

  auto* decompose = app.add_subcommand("decompose", "Core, quotient and characteristic vector of a partition");
  add_p(decompose);
  decompose->add_option("partition", o.partition, "Partition");
  decompose->add_flag("--explain", o.explain, "Show the Maya diagrams");
  add_format(decompose);

  auto* compose = app.add_subcommand("compose", "Partition from a quotient and characteristic vector");
  add_p(compose);
  compose->add_option("--quotient", o.quotient, "p-quotient");
  compose->add_option("--charvec", o.charvec, "Characteristic vector");
  compose->add_flag("--explain", o.explain, "Show the Maya diagrams");
  add_format(compose);

  auto* core = app.add_subcommand("core", "The p-core labelled by a characteristic vector");
  add_p(core);
  core->add_option("--charvec", o.charvec, "Characteristic vector");
  add_format(core);

  auto* poly = app.add_subcommand("poly", "q_lambda from the Wronskian and its factor R_lambda");
  add_p(poly);
  poly->add_option("partition", o.partition, "Partition");
  add_max_degree(poly);
  add_format(poly);

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients r_j of R_lambda");
  add_p(coeffs);
  coeffs->add_option("partition", o.partition, "Partition (or use --quotient and --charvec)");
  coeffs->add_option("--quotient", o.quotient, "p-quotient");
  coeffs->add_option("--charvec", o.charvec, "Characteristic vector");
  add_method(coeffs);
  add_max_degree(coeffs);
  add_format(coeffs);

  auto* limit = app.add_subcommand("limit", "Limit coefficients L_j and the limit polynomial");
  add_p(limit);
  limit->add_option("--quotient", o.quotient, "p-quotient");
  limit->add_option("--a", o.a, "Growth rates, comma-separated")->delimiter(',')->allow_extra_args(false);
  add_format(limit);

  auto* sweep = app.add_subcommand("sweep", "Convergence of rescaled R along c(k) = a k + b");
  add_p(sweep);
  sweep->add_option("--quotient", o.quotient, "p-quotient");
  sweep->add_option("--a", o.a, "Integer growth rates summing to zero")->delimiter(',')->allow_extra_args(false);
  sweep->add_option("--b", o.b, "Integer offsets summing to zero")->delimiter(',')->allow_extra_args(false);
  sweep->add_option("--k", o.k, "Increasing positive k values")->delimiter(',')->allow_extra_args(false);
  add_method(sweep);
  sweep->add_option("--tol", o.tol, "Root residual tolerance");
  add_max_degree(sweep);
  sweep->add_option("--out", o.out, "Write PREFIX_coefficients.csv, PREFIX_roots.csv and PREFIX.json");
  add_format(sweep);

  auto* selftest = app.add_subcommand("selftest", "Run the bijection and oracle checks at reduced size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(o);
    if (compose->parsed()) return cmd_compose(o);
    if (core->parsed()) return cmd_core(o);
    if (poly->parsed()) return cmd_poly(o);
    if (coeffs->parsed()) return cmd_coeffs(o);
    if (limit->parsed()) return cmd_limit(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
