#include "wap/report.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <system_error>

#include "text.hpp"
#include "wap/error.hpp"

namespace wap {

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::string coefficients_csv(const ConvergenceReport& report) {
  std::string out = "k,j,rescaled_coeff,L_j,abs_error\n";
  for (const auto& row : report.rows)
    for (const auto& c : row.coefficients)
      out += std::to_string(row.k) + ',' + std::to_string(c.j) + ',' + format_double(c.rescaled) + ',' +
             format_double(c.limit) + ',' + format_double(c.abs_error) + '\n';
  return out;
}

std::string roots_csv(const ConvergenceReport& report) {
  std::string out = "k,root_re,root_im,nearest_attractor,distance\n";
  for (const auto& row : report.rows)
    for (const auto& r : row.roots)
      out += std::to_string(row.k) + ',' + format_double(r.root.real()) + ',' + format_double(r.root.imag()) +
             ',' + format_double(r.attractor) + ',' + format_double(r.distance) + '\n';
  return out;
}

std::string report_json(const ConvergenceReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["p"] = report.mu.p();
  doc["quotient"] = report.mu.to_string();
  doc["growth"] = {{"a", report.growth.a}, {"b", report.growth.b}};
  doc["method"] = method_name(report.method);
  doc["attractors"] = report.alphas;
  doc["limit_coefficients"] = report.limit;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["k"] = row.k;
    r["charvec"] = row.charvec;
    r["lambda_size"] = row.lambda_size;
    r["core_size"] = row.core_size;
    std::vector<std::string> exact;
    for (const auto& v : row.exact) exact.push_back(to_decimal(v));
    r["r"] = exact;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : row.coefficients)
      coeffs.push_back({{"j", c.j}, {"rescaled", c.rescaled}, {"L", c.limit}, {"abs_error", c.abs_error}});
    r["coefficients"] = coeffs;
    r["sup_error"] = row.sup_error;
    ordered_json roots = ordered_json::array();
    for (const auto& z : row.roots)
      roots.push_back({{"re", z.root.real()},
                       {"im", z.root.imag()},
                       {"nearest", z.nearest},
                       {"attractor", z.attractor},
                       {"distance", z.distance}});
    r["roots"] = roots;
    r["attractor_counts"] = row.attractor_counts;
    r["counts_match"] = row.counts_match;
    rows.push_back(r);
  }
  doc["rows"] = rows;
  return doc.dump(2) + '\n';
}

std::string report_text(const ConvergenceReport& report) {
  const auto limit = limit_polynomial_exact(report.mu, report.growth.a);
  std::string out = "quotient: " + report.mu.to_string() + "\n";
  out += "growth: a=" + detail::join_ints(report.growth.a) + " b=" + detail::join_ints(report.growth.b) + "\n";
  out += "limit polynomial: " + limit.to_human() + "\n";
  out += "attractors:";
  for (std::size_t i = 0; i < report.alphas.size(); ++i)
    out += ' ' + format_double(report.alphas[i]) + " (x" + std::to_string(report.mu[i].size()) + ')';
  out += '\n';
  for (const auto& row : report.rows) {
    double worst = 0;
    for (const auto& z : row.roots) worst = std::max(worst, z.distance);
    out += "k=" + std::to_string(row.k) + " |lambda|=" + std::to_string(row.lambda_size) +
           " sup_error=" + format_double(row.sup_error) + " max_root_distance=" + format_double(worst) +
           " counts=" + detail::join_ints(row.attractor_counts) + (row.counts_match ? " ok" : " MISMATCH") + '\n';
  }
  return out;
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::Io, "cannot open " + temp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::remove(temp.c_str());
      fail(ErrorCode::Io, "failed writing " + temp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::remove(temp.c_str());
    fail(ErrorCode::Io, "cannot rename " + temp + " to " + path + ": " + ec.message());
  }
}

void write_report_files(const ConvergenceReport& report, const std::string& prefix) {
  const std::string coeffs = coefficients_csv(report);
  const std::string roots = roots_csv(report);
  const std::string json = report_json(report);
  write_file_atomic(prefix + "_coefficients.csv", coeffs);
  write_file_atomic(prefix + "_roots.csv", roots);
  write_file_atomic(prefix + ".json", json);
}

}  // namespace wap
