#include "dee/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <future>
#include <sstream>

namespace dee {

using nlohmann::ordered_json;

double round_significant(double x, int precision) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x, precision).c_str(), nullptr) + 0.0;
}

std::string format_number(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x + 0.0);
  return buf;
}

std::string format_exp_sum(const ExpSum& v, int precision) {
  if (v.representable()) return format_number(v.value(), precision);
  return format_number(v.rest, precision) + " + e^" + format_number(v.exponent, precision);
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

ordered_json number_or_null(double x, int precision) {
  if (!std::isfinite(x)) return nullptr;
  return round_significant(x, precision);
}

ordered_json exp_sum_json(const ExpSum& v, int precision) {
  ordered_json j;
  j["value"] = number_or_null(v.value(), precision);
  j["rest"] = round_significant(v.rest, precision);
  j["exponent"] = round_significant(v.exponent, precision);
  j["display"] = format_exp_sum(v, precision);
  return j;
}

// Eigenvalues classified as zero print as exactly 0 so rounding noise does
// not leak into the document.
double clean_eigenvalue(double mu, const DSpectrum& s, int precision) {
  if (std::abs(mu) <= zero_threshold(s.largest())) return 0.0;
  return round_significant(mu, precision);
}

double ratio(const ExpSum& num, const ExpSum& den) { return std::exp(num.log() - den.log()); }

}  // namespace

ordered_json report_json(const ReportInput& in, const ReportOptions& opt) {
  const int prec = opt.precision;
  const auto& b = in.bounds;
  const auto& p = b.profile;
  ordered_json doc;

  doc["graph"]["n"] = in.graph.order();
  doc["graph"]["m"] = in.graph.size();
  doc["graph"]["family"] = in.family ? ordered_json(*in.family) : ordered_json(nullptr);

  auto& prof = doc["profile"];
  prof["wiener"] = p.wiener;
  prof["geo_mean"] = round_significant(p.geo_mean, prec);
  prof["diameter"] = p.diameter;
  prof["distance_degrees"] = ordered_json::array();
  for (auto d : p.distance_degrees) prof["distance_degrees"].push_back(d);
  if (auto r = is_distance_degree_regular(p))
    prof["distance_degree_regular"] = *r;
  else
    prof["distance_degree_regular"] = nullptr;
  prof["spectral_moment_2"] = spectral_moment_from_distances(p, 2);

  auto& spec = doc["spectrum"];
  spec["eigenvalues"] = ordered_json::array();
  for (double mu : b.spectrum.eigenvalues)
    spec["eigenvalues"].push_back(clean_eigenvalue(mu, b.spectrum, prec));
  spec["n_plus"] = b.spectrum.n_plus;
  spec["n_zero"] = b.spectrum.n_zero;
  spec["n_minus"] = b.spectrum.n_minus;

  const ExpSum dee_split = as_exp_sum(b.dee_exact);
  auto& d = doc["dee"];
  d["value"] = number_or_null(b.dee_exact.value, prec);
  d["rest"] = round_significant(b.dee_exact.split_rest, prec);
  d["lead_exponent"] = round_significant(b.dee_exact.split_lead, prec);
  d["overflow"] = b.dee_exact.overflow;
  d["display"] = format_number(b.dee_exact.split_rest, prec) + " + e^" +
                 format_number(b.dee_exact.split_lead, prec);

  auto& bj = doc["bounds"];
  bj["lower_prior"] = exp_sum_json(b.lower_prior, prec);
  bj["lower_thm1"] = exp_sum_json(b.lower_thm1, prec);
  bj["lower_spectral"] = exp_sum_json(b.lower_spectral, prec);
  bj["upper_thm1"] = exp_sum_json(b.upper_thm1, prec);
  bj["upper_prior"] = exp_sum_json(b.upper_prior, prec);
  bj["mu1_lb_wiener"] = round_significant(b.mu1_lb_wiener, prec);
  bj["mu1_lb_degrees"] = round_significant(b.mu1_lb_degrees, prec);
  if (b.corollary1) {
    bj["corollary1"]["lower"] = exp_sum_json(b.corollary1->lower, prec);
    bj["corollary1"]["upper"] = exp_sum_json(b.corollary1->upper, prec);
  } else {
    bj["corollary1"] = nullptr;
  }
  bj["equality_lower"] = b.equality_lower;
  bj["equality_upper"] = b.equality_upper;
  bj["lower_over_dee"] = round_significant(ratio(b.lower_thm1, dee_split), prec);
  bj["dee_over_upper"] = round_significant(ratio(dee_split, b.upper_thm1), prec);

  doc["provenance"]["tool"] = "dee";
  doc["provenance"]["version"] = std::string(kToolVersion);
  doc["provenance"]["input_digest"] = input_digest(in.source_text);
  return doc;
}

std::string report_table(const ReportInput& in, const ReportOptions& opt) {
  const int prec = opt.precision;
  const auto& b = in.bounds;
  const auto& p = b.profile;
  std::ostringstream os;
  auto row = [&os](std::string_view key, const std::string& value) {
    os << key;
    for (auto i = key.size(); i < 18; ++i) os << ' ';
    os << value << '\n';
  };

  row("graph", "n=" + std::to_string(in.graph.order()) + " m=" + std::to_string(in.graph.size()) +
                   (in.family ? " family=" + *in.family : std::string()));
  row("wiener", std::to_string(p.wiener));
  row("geo_mean", format_number(p.geo_mean, prec));
  row("diameter", std::to_string(p.diameter));
  std::string degrees;
  for (auto dd : p.distance_degrees) degrees += (degrees.empty() ? "" : " ") + std::to_string(dd);
  row("distance_degrees", degrees);
  auto r = is_distance_degree_regular(p);
  row("dd_regular", r ? "r=" + std::to_string(*r) : "no");

  std::string eig;
  for (double mu : b.spectrum.eigenvalues)
    eig += (eig.empty() ? "" : " ") + format_number(clean_eigenvalue(mu, b.spectrum, prec), prec);
  row("eigenvalues", eig);
  row("signs", "+" + std::to_string(b.spectrum.n_plus) + " 0:" + std::to_string(b.spectrum.n_zero) +
                   " -" + std::to_string(b.spectrum.n_minus));
  row("dee", b.dee_exact.overflow ? "overflow" : format_number(b.dee_exact.value, prec));
  row("dee_split", format_number(b.dee_exact.split_rest, prec) + " + e^" +
                       format_number(b.dee_exact.split_lead, prec));
  row("lower_prior", format_exp_sum(b.lower_prior, prec));
  row("lower_thm1", format_exp_sum(b.lower_thm1, prec));
  row("lower_spectral", format_exp_sum(b.lower_spectral, prec));
  row("upper_thm1", format_exp_sum(b.upper_thm1, prec));
  row("upper_prior", format_exp_sum(b.upper_prior, prec));
  row("mu1_lb_wiener", format_number(b.mu1_lb_wiener, prec));
  row("mu1_lb_degrees", format_number(b.mu1_lb_degrees, prec));
  if (b.corollary1) {
    row("corollary1", format_exp_sum(b.corollary1->lower, prec) + " .. " +
                          format_exp_sum(b.corollary1->upper, prec));
  } else {
    row("corollary1", "n/a");
  }
  row("equality_lower", b.equality_lower ? "true" : "false");
  row("equality_upper", b.equality_upper ? "true" : "false");
  row("input_digest", input_digest(in.source_text));
  return os.str();
}

std::vector<SweepRow> run_sweep(FamilyTag family, int start, int end) {
  std::vector<std::future<SweepRow>> jobs;
  for (int n = start; n <= end; ++n) {
    jobs.push_back(std::async(std::launch::async, [family, n] {
      SweepRow row;
      row.n = n;
      try {
        row.report = bounds_report(generate({family, n}));
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(jobs.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

namespace {

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string sweep_csv(FamilyTag family, const std::vector<SweepRow>& rows, const ReportOptions& opt) {
  const int prec = opt.precision;
  std::ostringstream os;
  os << "family,n,status,wiener,geo_mean,diameter,mu1,dee,lower_prior,lower_thm1,lower_spectral,"
        "upper_thm1,upper_prior,corollary1_lower,corollary1_upper,lower_over_dee,dee_over_upper\n";
  for (const auto& row : rows) {
    os << family_name(family) << ',' << row.n << ',';
    if (!row.report) {
      os << csv_escape("error: " + row.error) << ",,,,,,,,,,,,,,\n";
      continue;
    }
    const auto& b = *row.report;
    const ExpSum exact = as_exp_sum(b.dee_exact);
    os << "ok," << b.profile.wiener << ',' << format_number(b.profile.geo_mean, prec) << ','
       << b.profile.diameter << ',' << format_number(b.spectrum.largest(), prec) << ','
       << format_exp_sum(exact, prec) << ',' << format_exp_sum(b.lower_prior, prec) << ','
       << format_exp_sum(b.lower_thm1, prec) << ',' << format_exp_sum(b.lower_spectral, prec) << ','
       << format_exp_sum(b.upper_thm1, prec) << ',' << format_exp_sum(b.upper_prior, prec) << ',';
    if (b.corollary1)
      os << format_exp_sum(b.corollary1->lower, prec) << ',' << format_exp_sum(b.corollary1->upper, prec);
    else
      os << ',';
    os << ',' << format_number(ratio(b.lower_thm1, exact), prec) << ','
       << format_number(ratio(exact, b.upper_thm1), prec) << '\n';
  }
  return os.str();
}

ordered_json sweep_json(FamilyTag family, const std::vector<SweepRow>& rows, const ReportOptions& opt) {
  const int prec = opt.precision;
  ordered_json doc;
  doc["family"] = family_name(family);
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j;
    j["n"] = row.n;
    if (!row.report) {
      j["status"] = "error";
      j["error"] = row.error;
      doc["rows"].push_back(std::move(j));
      continue;
    }
    const auto& b = *row.report;
    const ExpSum exact = as_exp_sum(b.dee_exact);
    j["status"] = "ok";
    j["wiener"] = b.profile.wiener;
    j["geo_mean"] = round_significant(b.profile.geo_mean, prec);
    j["diameter"] = b.profile.diameter;
    j["mu1"] = round_significant(b.spectrum.largest(), prec);
    j["dee"] = exp_sum_json(exact, prec);
    j["lower_prior"] = exp_sum_json(b.lower_prior, prec);
    j["lower_thm1"] = exp_sum_json(b.lower_thm1, prec);
    j["lower_spectral"] = exp_sum_json(b.lower_spectral, prec);
    j["upper_thm1"] = exp_sum_json(b.upper_thm1, prec);
    j["upper_prior"] = exp_sum_json(b.upper_prior, prec);
    if (b.corollary1) {
      j["corollary1"]["lower"] = exp_sum_json(b.corollary1->lower, prec);
      j["corollary1"]["upper"] = exp_sum_json(b.corollary1->upper, prec);
    } else {
      j["corollary1"] = nullptr;
    }
    j["lower_over_dee"] = round_significant(ratio(b.lower_thm1, exact), prec);
    j["dee_over_upper"] = round_significant(ratio(exact, b.upper_thm1), prec);
    doc["rows"].push_back(std::move(j));
  }
  return doc;
}

}  // namespace dee
