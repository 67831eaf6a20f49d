#include "wap/wap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "text.hpp"
#include "wap/coeff_asymptotics.hpp"
#include "wap/core_quotient.hpp"
#include "wap/error.hpp"
#include "wap/hook_products.hpp"
#include "wap/report.hpp"
#include "wap/selftest.hpp"
#include "wap/wronskian.hpp"

struct wap_partition {
  wap::Partition value;
};
struct wap_quotient {
  wap::PQuotient value;
};
struct wap_charvec {
  wap::CharacteristicVector value;
};
struct wap_decomposition {
  wap::Partition lambda;
  std::size_t p;
  wap::Decomposition value;
  wap::StripRemoval strips;
};
struct wap_poly {
  wap::IntPolynomial value;
};
struct wap_report {
  wap::ConvergenceReport value;
};

namespace {

thread_local std::string last_error;

wap_status status_of(wap::ErrorCode code) {
  switch (code) {
    case wap::ErrorCode::Parse: return WAP_ERR_PARSE;
    case wap::ErrorCode::InvalidArgument: return WAP_ERR_INVALID_ARGUMENT;
    case wap::ErrorCode::SizeLimit: return WAP_ERR_SIZE_LIMIT;
    case wap::ErrorCode::InternalConsistency: return WAP_ERR_INTERNAL;
    case wap::ErrorCode::Io: return WAP_ERR_IO;
  }
  return WAP_ERR_UNKNOWN;
}

template <class Body>
wap_status guarded(Body body) {
  try {
    body();
    last_error.clear();
    return WAP_OK;
  } catch (const wap::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return WAP_ERR_UNKNOWN;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* ptr, const char* what) {
  wap::require(ptr != nullptr, wap::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

template <class T>
void put_string(char** out, const T& make) {
  need(out, "output pointer");
  *out = copy_string(make());
}

std::size_t degree_bound(std::size_t max_degree) {
  return max_degree == 0 ? wap::kDefaultMaxWronskianDegree : max_degree;
}

wap::Method method_of(wap_method m) {
  switch (m) {
    case WAP_METHOD_WRONSKIAN: return wap::Method::Wronskian;
    case WAP_METHOD_FORMULA: return wap::Method::Formula;
    case WAP_METHOD_BOTH: return wap::Method::Both;
  }
  wap::fail(wap::ErrorCode::InvalidArgument, "unknown method");
}

}  // namespace

extern "C" {

const char* wap_last_error(void) { return last_error.c_str(); }

void wap_string_free(char* s) { std::free(s); }

wap_status wap_partition_parse(const char* text, wap_partition** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new wap_partition{wap::Partition::parse(text)};
  });
}

void wap_partition_free(wap_partition* lambda) { delete lambda; }

wap_status wap_partition_to_string(const wap_partition* lambda, char** out) {
  return guarded([&] {
    need(lambda, "partition");
    put_string(out, [&] { return lambda->value.to_string(); });
  });
}

int64_t wap_partition_size(const wap_partition* lambda) { return lambda ? lambda->value.size() : -1; }

wap_status wap_partition_degree_vector(const wap_partition* lambda, char** out) {
  return guarded([&] {
    need(lambda, "partition");
    put_string(out, [&] { return wap::detail::join_ints(wap::degree_vector(lambda->value).entries); });
  });
}

wap_status wap_partition_maya(const wap_partition* lambda, char** out) {
  return guarded([&] {
    need(lambda, "partition");
    put_string(out, [&] { return wap::maya_from_partition(lambda->value).render(); });
  });
}

wap_status wap_quotient_parse(const char* text, wap_quotient** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new wap_quotient{wap::PQuotient::parse(text)};
  });
}

void wap_quotient_free(wap_quotient* mu) { delete mu; }

wap_status wap_quotient_to_string(const wap_quotient* mu, char** out) {
  return guarded([&] {
    need(mu, "quotient");
    put_string(out, [&] { return mu->value.to_string(); });
  });
}

size_t wap_quotient_p(const wap_quotient* mu) { return mu ? mu->value.p() : 0; }
int64_t wap_quotient_size(const wap_quotient* mu) { return mu ? mu->value.size() : -1; }

wap_status wap_charvec_parse(const char* text, wap_charvec** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new wap_charvec{wap::CharacteristicVector::parse(text)};
  });
}

void wap_charvec_free(wap_charvec* c) { delete c; }

wap_status wap_charvec_to_string(const wap_charvec* c, char** out) {
  return guarded([&] {
    need(c, "characteristic vector");
    put_string(out, [&] { return c->value.to_string(); });
  });
}

size_t wap_charvec_p(const wap_charvec* c) { return c ? c->value.p() : 0; }

wap_status wap_decompose(const wap_partition* lambda, size_t p, wap_decomposition** out) {
  return guarded([&] {
    need(lambda, "partition");
    need(out, "output pointer");
    wap::require(p >= 1, wap::ErrorCode::InvalidArgument, "p must be a positive integer");
    auto d = wap::decompose(lambda->value, p);
    auto strips = wap::core_by_strip_removal(lambda->value, p);
    *out = new wap_decomposition{lambda->value, p, std::move(d), std::move(strips)};
  });
}

void wap_decomposition_free(wap_decomposition* d) { delete d; }

wap_status wap_decomposition_quotient(const wap_decomposition* d, wap_quotient** out) {
  return guarded([&] {
    need(d, "decomposition");
    need(out, "output pointer");
    *out = new wap_quotient{d->value.quotient};
  });
}

wap_status wap_decomposition_charvec(const wap_decomposition* d, wap_charvec** out) {
  return guarded([&] {
    need(d, "decomposition");
    need(out, "output pointer");
    *out = new wap_charvec{d->value.charvec};
  });
}

wap_status wap_decomposition_core(const wap_decomposition* d, wap_partition** out) {
  return guarded([&] {
    need(d, "decomposition");
    need(out, "output pointer");
    *out = new wap_partition{wap::core_from_charvec(d->value.charvec)};
  });
}

int64_t wap_decomposition_core_size_formula(const wap_decomposition* d) {
  return d ? wap::core_size_from_charvec(d->value.charvec) : -1;
}

int64_t wap_decomposition_core_size_strips(const wap_decomposition* d) { return d ? d->strips.core.size() : -1; }

int wap_decomposition_ht_parity(const wap_decomposition* d) { return d ? d->strips.ht_parity : -1; }

wap_status wap_decomposition_explain(const wap_decomposition* d, char** out) {
  return guarded([&] {
    need(d, "decomposition");
    put_string(out, [&] {
      std::string text = "M(lambda)  " + wap::maya_from_partition(d->lambda).render() + "\n";
      const auto parts = wap::quotient_diagrams(d->value.quotient, d->value.charvec);
      for (std::size_t i = 0; i < parts.size(); ++i)
        text += "M^(" + std::to_string(i) + ")     " + parts[i].render() + "\n";
      return text;
    });
  });
}

wap_status wap_compose(const wap_quotient* mu, const wap_charvec* c, wap_partition** out) {
  return guarded([&] {
    need(mu, "quotient");
    need(c, "characteristic vector");
    need(out, "output pointer");
    *out = new wap_partition{wap::compose(mu->value, c->value)};
  });
}

wap_status wap_core_from_charvec(const wap_charvec* c, wap_partition** out) {
  return guarded([&] {
    need(c, "characteristic vector");
    need(out, "output pointer");
    *out = new wap_partition{wap::core_from_charvec(c->value)};
  });
}

int64_t wap_core_size_from_charvec(const wap_charvec* c) { return c ? wap::core_size_from_charvec(c->value) : -1; }

void wap_poly_free(wap_poly* poly) { delete poly; }

int64_t wap_poly_degree(const wap_poly* poly) { return poly ? poly->value.degree() : -1; }

wap_status wap_poly_coeff(const wap_poly* poly, size_t d, char** out) {
  return guarded([&] {
    need(poly, "polynomial");
    put_string(out, [&] { return wap::to_decimal(poly->value.coeff(d)); });
  });
}

wap_status wap_poly_json(const wap_poly* poly, char** out) {
  return guarded([&] {
    need(poly, "polynomial");
    put_string(out, [&] { return poly->value.to_json(); });
  });
}

wap_status wap_poly_human(const wap_poly* poly, char** out) {
  return guarded([&] {
    need(poly, "polynomial");
    put_string(out, [&] { return poly->value.to_human(); });
  });
}

wap_status wap_q_lambda(const wap_partition* lambda, size_t p, size_t max_degree, wap_poly** out) {
  return guarded([&] {
    need(lambda, "partition");
    need(out, "output pointer");
    wap::require(p >= 1, wap::ErrorCode::InvalidArgument, "p must be a positive integer");
    *out = new wap_poly{wap::factorize(lambda->value, p, degree_bound(max_degree)).q};
  });
}

wap_status wap_r_lambda(const wap_partition* lambda, size_t p, size_t max_degree, wap_poly** out) {
  return guarded([&] {
    need(lambda, "partition");
    need(out, "output pointer");
    wap::require(p >= 1, wap::ErrorCode::InvalidArgument, "p must be a positive integer");
    *out = new wap_poly{wap::extract_R(lambda->value, p, degree_bound(max_degree))};
  });
}

wap_status wap_r_by_method(const wap_quotient* mu, const wap_charvec* c, wap_method method, size_t max_degree,
                           wap_poly** out) {
  return guarded([&] {
    need(mu, "quotient");
    need(c, "characteristic vector");
    need(out, "output pointer");
    wap::require(mu->value.p() == c->value.p(), wap::ErrorCode::InvalidArgument,
                 "quotient and characteristic vector lengths differ");
    const auto m = method_of(method);
    wap::IntPolynomial r;
    if (m != wap::Method::Wronskian) r = wap::r_polynomial_by_formula(mu->value, c->value);
    if (m != wap::Method::Formula) {
      auto w = wap::extract_R(wap::compose(mu->value, c->value), mu->value.p(), degree_bound(max_degree));
      wap::require(m == wap::Method::Wronskian || w == r, wap::ErrorCode::InternalConsistency,
                   "Wronskian and coefficient formula disagree for quotient (" + mu->value.to_string() +
                       "), charvec (" + c->value.to_string() + ")");
      r = std::move(w);
    }
    *out = new wap_poly{std::move(r)};
  });
}

wap_status wap_attractors(const double* a, size_t n, double* alphas) {
  return guarded([&] {
    need(a, "rates");
    need(alphas, "output array");
    const auto v = wap::attractors(std::span<const double>(a, n)).alphas;
    std::copy(v.begin(), v.end(), alphas);
  });
}

wap_status wap_limit_coefficients(const wap_quotient* mu, const double* a, size_t n, double* out) {
  return guarded([&] {
    need(mu, "quotient");
    need(a, "rates");
    need(out, "output array");
    const auto v = wap::limit_coefficients(mu->value, std::span<const double>(a, n));
    std::copy(v.begin(), v.end(), out);
  });
}

wap_status wap_limit_polynomial_exact(const wap_quotient* mu, const int64_t* a, size_t n, wap_poly** out) {
  return guarded([&] {
    need(mu, "quotient");
    need(a, "rates");
    need(out, "output pointer");
    *out = new wap_poly{wap::limit_polynomial_exact(mu->value, std::span<const int64_t>(a, n))};
  });
}

wap_status wap_sweep(const wap_quotient* mu, const int64_t* a, const int64_t* b, size_t p, const int64_t* k,
                     size_t k_count, const wap_sweep_options* options, wap_report** out) {
  return guarded([&] {
    need(mu, "quotient");
    need(a, "rates");
    need(k, "k list");
    need(out, "output pointer");
    std::vector<wap::Index> offsets = b ? std::vector<wap::Index>(b, b + p) : std::vector<wap::Index>{};
    wap::GrowthSpec growth(std::vector<wap::Index>(a, a + p), std::move(offsets));
    wap::ConvergenceOptions opts;
    if (options) {
      opts.method = method_of(options->method);
      if (options->root_tol > 0) opts.root_tol = options->root_tol;
      opts.max_wronskian_degree = degree_bound(options->max_degree);
    }
    *out = new wap_report{wap::run_convergence(mu->value, growth, std::span<const wap::Index>(k, k_count), opts)};
  });
}

void wap_report_free(wap_report* report) { delete report; }

size_t wap_report_rows(const wap_report* report) { return report ? report->value.rows.size() : 0; }

int64_t wap_report_row_k(const wap_report* report, size_t row) {
  return report && row < report->value.rows.size() ? report->value.rows[row].k : -1;
}

double wap_report_row_sup_error(const wap_report* report, size_t row) {
  return report && row < report->value.rows.size() ? report->value.rows[row].sup_error : -1;
}

double wap_report_row_max_root_distance(const wap_report* report, size_t row) {
  if (!report || row >= report->value.rows.size()) return -1;
  double worst = 0;
  for (const auto& z : report->value.rows[row].roots) worst = std::max(worst, z.distance);
  return worst;
}

int wap_report_row_counts_match(const wap_report* report, size_t row) {
  return report && row < report->value.rows.size() ? report->value.rows[row].counts_match : -1;
}

wap_status wap_report_text(const wap_report* report, char** out) {
  return guarded([&] {
    need(report, "report");
    put_string(out, [&] { return wap::report_text(report->value); });
  });
}

wap_status wap_report_json(const wap_report* report, char** out) {
  return guarded([&] {
    need(report, "report");
    put_string(out, [&] { return wap::report_json(report->value); });
  });
}

wap_status wap_report_coefficients_csv(const wap_report* report, char** out) {
  return guarded([&] {
    need(report, "report");
    put_string(out, [&] { return wap::coefficients_csv(report->value); });
  });
}

wap_status wap_report_roots_csv(const wap_report* report, char** out) {
  return guarded([&] {
    need(report, "report");
    put_string(out, [&] { return wap::roots_csv(report->value); });
  });
}

wap_status wap_report_write(const wap_report* report, const char* prefix) {
  return guarded([&] {
    need(report, "report");
    need(prefix, "prefix");
    wap::write_report_files(report->value, prefix);
  });
}

wap_status wap_selftest(char** out, int* passed) {
  return guarded([&] {
    need(out, "output pointer");
    need(passed, "passed flag");
    bool all = true;
    std::string text;
    for (const auto& c : wap::run_selftest()) {
      all = all && c.passed;
      text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    }
    *out = copy_string(text);
    *passed = all ? 1 : 0;
  });
}

}  // extern "C"
