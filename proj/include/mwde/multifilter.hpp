#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace mwde {

// A wavelet or multiwavelet family given by its recursion coefficients.
// lowpass holds the r x r matrices H_k for tap indices
// k = support_lo ... support_lo + lowpass.size() - 1. The support of the
// scaling vector is [support_lo, support_hi]; support_hi is usually the last
// tap index but can be smaller when leading rows of the trailing matrices
// vanish (dghm, whose scaling vector lives on [0,2] with taps k = 0..3).
struct Multifilter {
  std::string name;
  int multiplicity = 1;
  int dilation = 2;
  int support_lo = 0;
  int support_hi = 1;
  std::vector<Eigen::MatrixXd> lowpass;
  std::vector<Eigen::MatrixXd> highpass;

  int first_tap() const { return support_lo; }
  int tap_count() const { return static_cast<int>(lowpass.size()); }
  int support_length() const { return support_hi - support_lo; }
  bool has_highpass() const { return !highpass.empty(); }
};

// max over shifts t of the sup-norm of sum_k T_k T_{k+2t}^T - delta_{0t} I.
double orthogonality_residual(const std::vector<Eigen::MatrixXd>& taps);

// Worst residual over the lowpass bank, the highpass bank (if present), and
// their cross terms sum_k G_k H_{k+2t}^T, which must vanish for all t.
double orthogonality_residual(const Multifilter& f);

// Throws std::invalid_argument (structural defects) or std::runtime_error
// (orthogonality residual above tol, message carries the residual).
void validate_filter(const Multifilter& f, double tol = 1e-8);

// Multiplicity-2 filter whose scaling components are sqrt(2)*phi(2x) and
// sqrt(2)*phi(2x-1) for the scalar phi of `base` (polyphase regrouping of
// the scalar taps). Bases whose support starts on an odd integer are first
// shifted by one so the result stays integer-aligned.
Multifilter balance_scalar_filter(const Multifilter& base);

// Registry: compiled-in families plus "bal-<name>" for every scalar family.
// "balanced-<name>" is accepted as an alias of "bal-<name>".
std::vector<std::string> builtin_filter_names();

// Accepts a registry name or a path to a filter file (anything containing a
// path separator or ending in ".json"). Validates before returning.
Multifilter load_filter(const std::string& source);

// JSON record round trip; serialization preserves every matrix entry
// bit-exactly (shortest round-trip float formatting).
std::string serialize_filter(const Multifilter& f);
Multifilter parse_filter(const std::string& json_text);

}  // namespace mwde
