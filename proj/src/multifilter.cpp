#include "mwde/multifilter.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mwde/filter_data.hpp"

namespace mwde {
namespace {

using nlohmann::json;

Eigen::MatrixXd zero_like(int r) { return Eigen::MatrixXd::Zero(r, r); }

// sup-norm of sum_k A_k B_{k+2t}^T - delta_{0t} I over all shifts t.
double pair_residual(const std::vector<Eigen::MatrixXd>& a,
                     const std::vector<Eigen::MatrixXd>& b, bool want_identity) {
  const int n = static_cast<int>(std::max(a.size(), b.size()));
  const int r = static_cast<int>(a.front().rows());
  double worst = 0.0;
  for (int t = -(n / 2); t <= n / 2; ++t) {
    Eigen::MatrixXd acc = zero_like(r);
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
      const int m = k + 2 * t;
      if (m >= 0 && m < static_cast<int>(b.size())) acc += a[k] * b[m].transpose();
    }
    if (want_identity && t == 0) acc -= Eigen::MatrixXd::Identity(r, r);
    worst = std::max(worst, acc.cwiseAbs().maxCoeff());
  }
  return worst;
}

Multifilter from_embedded(const detail::EmbeddedFilter& e) {
  Multifilter f;
  f.name = e.name;
  f.multiplicity = e.multiplicity;
  f.support_lo = e.support_lo;
  f.support_hi = e.support_hi;
  const int r = e.multiplicity;
  const int taps = static_cast<int>(e.lowpass.size()) / (r * r);
  auto unpack = [&](const std::vector<double>& flat) {
    std::vector<Eigen::MatrixXd> out;
    out.reserve(taps);
    for (int k = 0; k < taps; ++k) {
      Eigen::MatrixXd m(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = flat[(k * r + i) * r + j];
      out.push_back(std::move(m));
    }
    return out;
  };
  f.lowpass = unpack(e.lowpass);
  if (!e.highpass.empty()) f.highpass = unpack(e.highpass);
  return f;
}

json matrices_to_json(const std::vector<Eigen::MatrixXd>& taps) {
  json out = json::array();
  for (const auto& m : taps) {
    json mat = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      mat.push_back(std::move(row));
    }
    out.push_back(std::move(mat));
  }
  return out;
}

std::vector<Eigen::MatrixXd> matrices_from_json(const json& arr, int r,
                                                const char* what) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument(std::string("filter record: ") + what +
                                " must be a nonempty array of matrices");
  std::vector<Eigen::MatrixXd> out;
  for (const auto& mat : arr) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != r)
      throw std::invalid_argument(std::string("filter record: ") + what +
                                  " matrix has wrong row count");
    Eigen::MatrixXd m(r, r);
    for (int i = 0; i < r; ++i) {
      const auto& row = mat[i];
      if (!row.is_array() || static_cast<int>(row.size()) != r)
        throw std::invalid_argument(std::string("filter record: ") + what +
                                    " matrix has wrong column count");
      for (int j = 0; j < r; ++j) m(i, j) = row[j].get<double>();
    }
    out.push_back(std::move(m));
  }
  return out;
}

const std::vector<detail::EmbeddedFilter>& embedded() {
  static const std::vector<detail::EmbeddedFilter> filters =
      detail::embedded_filters();
  return filters;
}

std::string canonical_name(const std::string& name) {
  constexpr std::string_view kAlias = "balanced-";
  if (name.rfind(kAlias, 0) == 0)
    return "bal-" + name.substr(kAlias.size());
  return name;
}

}  // namespace

double orthogonality_residual(const std::vector<Eigen::MatrixXd>& taps) {
  return pair_residual(taps, taps, true);
}

double orthogonality_residual(const Multifilter& f) {
  double worst = pair_residual(f.lowpass, f.lowpass, true);
  if (f.has_highpass()) {
    worst = std::max(worst, pair_residual(f.highpass, f.highpass, true));
    worst = std::max(worst, pair_residual(f.highpass, f.lowpass, false));
  }
  return worst;
}

void validate_filter(const Multifilter& f, double tol) {
  if (f.multiplicity < 1)
    throw std::invalid_argument("filter " + f.name + ": multiplicity must be >= 1");
  if (f.dilation != 2)
    throw std::invalid_argument("filter " + f.name + ": only dilation 2 is supported");
  if (f.lowpass.size() < 2)
    throw std::invalid_argument("filter " + f.name + ": needs at least two taps");
  if (f.support_hi <= f.support_lo)
    throw std::invalid_argument("filter " + f.name + ": empty support interval");
  if (f.support_length() > f.tap_count() - 1)
    throw std::invalid_argument(
        "filter " + f.name + ": support exceeds the extent of the tap range");
  const int r = f.multiplicity;
  auto check_shapes = [&](const std::vector<Eigen::MatrixXd>& taps, const char* what) {
    for (const auto& m : taps) {
      if (m.rows() != r || m.cols() != r)
        throw std::invalid_argument("filter " + f.name + ": " + what +
                                    " matrix is not " + std::to_string(r) + "x" +
                                    std::to_string(r));
      if (!m.allFinite())
        throw std::invalid_argument("filter " + f.name + ": " + what +
                                    " contains a non-finite entry");
    }
  };
  check_shapes(f.lowpass, "lowpass");
  if (f.has_highpass()) {
    if (f.highpass.size() != f.lowpass.size())
      throw std::invalid_argument("filter " + f.name +
                                  ": highpass tap count differs from lowpass");
    check_shapes(f.highpass, "highpass");
  }
  const double residual = orthogonality_residual(f);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "filter " << f.name << ": orthogonality residual " << residual
        << " exceeds tolerance " << tol;
    throw std::runtime_error(msg.str());
  }
}

Multifilter balance_scalar_filter(const Multifilter& base) {
  if (base.multiplicity != 1)
    throw std::invalid_argument("balance_scalar_filter: base filter " + base.name +
                                " has multiplicity != 1");
  const int L = base.tap_count();
  if (L % 2 != 0)
    throw std::invalid_argument("balance_scalar_filter: base filter " + base.name +
                                " has odd tap count");
  // Work with taps indexed from an even left endpoint; shifting by one
  // translates the base scaling function by one, which changes nothing
  // downstream (translate ranges absorb integer shifts).
  int lo = base.support_lo;
  int shift = 0;
  if (lo % 2 != 0) {
    shift = 1;
    lo += 1;
  }
  auto h = [&](int n) -> double {
    const int idx = n - shift - base.support_lo;
    if (idx < 0 || idx >= L) return 0.0;
    return base.lowpass[idx](0, 0);
  };

  Multifilter out;
  out.name = "bal-" + base.name;
  out.multiplicity = 2;
  out.support_lo = lo / 2;
  out.support_hi = (lo + L) / 2;
  for (int k = out.support_lo; k <= out.support_hi; ++k) {
    Eigen::MatrixXd m(2, 2);
    m << h(2 * k), h(2 * k + 1), h(2 * k - 2), h(2 * k - 1);
    out.lowpass.push_back(std::move(m));
  }
  if (base.has_highpass()) {
    auto g = [&](int n) -> double {
      const int idx = n - shift - base.support_lo;
      if (idx < 0 || idx >= L) return 0.0;
      return base.highpass[idx](0, 0);
    };
    // The same two-phase regrouping applied to the scalar highpass yields
    // multiwavelet components sqrt(2)*psi(2x) and sqrt(2)*psi(2x-1).
    for (int k = out.support_lo; k <= out.support_hi; ++k) {
      Eigen::MatrixXd m(2, 2);
      m << g(2 * k), g(2 * k + 1), g(2 * k - 2), g(2 * k - 1);
      out.highpass.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<std::string> builtin_filter_names() {
  std::vector<std::string> names;
  for (const auto& e : embedded()) names.push_back(e.name);
  for (const auto& e : embedded())
    if (e.multiplicity == 1) names.push_back("bal-" + e.name);
  return names;
}

Multifilter load_filter(const std::string& source) {
  const bool is_path = source.find('/') != std::string::npos ||
                       source.find('\\') != std::string::npos ||
                       (source.size() > 5 &&
                        source.compare(source.size() - 5, 5, ".json") == 0);
  if (is_path) {
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open filter file: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_filter(buf.str());
  }

  const std::string name = canonical_name(source);
  if (name.rfind("bal-", 0) == 0) {
    const std::string base_name = name.substr(4);
    for (const auto& e : embedded()) {
      if (e.name == base_name) {
        if (e.multiplicity != 1)
          throw std::invalid_argument("cannot balance non-scalar filter: " +
                                      base_name);
        Multifilter balanced = balance_scalar_filter(from_embedded(e));
        validate_filter(balanced);
        return balanced;
      }
    }
    throw std::invalid_argument("unknown filter family: " + source);
  }
  for (const auto& e : embedded()) {
    if (e.name == name) {
      Multifilter f = from_embedded(e);
      validate_filter(f);
      return f;
    }
  }
  throw std::invalid_argument("unknown filter family: " + source);
}

std::string serialize_filter(const Multifilter& f) {
  json rec;
  rec["name"] = f.name;
  rec["multiplicity"] = f.multiplicity;
  rec["support"] = {f.support_lo, f.support_hi};
  rec["lowpass"] = matrices_to_json(f.lowpass);
  if (f.has_highpass()) rec["highpass"] = matrices_to_json(f.highpass);
  return rec.dump(1);
}

Multifilter parse_filter(const std::string& json_text) {
  json rec;
  try {
    rec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("filter record: invalid JSON: ") +
                                e.what());
  }
  Multifilter f;
  try {
    f.name = rec.at("name").get<std::string>();
    f.multiplicity = rec.at("multiplicity").get<int>();
    const auto& support = rec.at("support");
    if (!support.is_array() || support.size() != 2)
      throw std::invalid_argument("filter record: support must be [lo, hi]");
    f.support_lo = support[0].get<int>();
    f.support_hi = support[1].get<int>();
    f.lowpass = matrices_from_json(rec.at("lowpass"), f.multiplicity, "lowpass");
    if (rec.contains("highpass"))
      f.highpass = matrices_from_json(rec["highpass"], f.multiplicity, "highpass");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("filter record: ") + e.what());
  }
  validate_filter(f);
  return f;
}

}  // namespace mwde
