#ifndef SUPERHYP_CORE_HPP
#define SUPERHYP_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace superhyp {

template <class Real>
using complex = std::complex<Real>;

template <class Real>
using cmatrix = Eigen::Matrix<complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real>
using cvector = Eigen::Matrix<complex<Real>, Eigen::Dynamic, 1>;

using real = double;
using cx = complex<real>;
using CMatrix = cmatrix<real>;
using CVector = cvector<real>;
using RVector = Eigen::VectorXd;
using IMatrix = Eigen::MatrixXi;

enum class ErrorCode {
  invalid_dimension,
  invalid_matrix,
  invalid_tolerance,
  invalid_index,
  invalid_level,
  invalid_argument,
  invalid_gauge,
  index_out_of_range,
  overflow_domain,
  invariant_violation,
};

std::string_view to_string(ErrorCode code);

// Every library failure surfaces as this type; code() is stable, what() is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::invalid_matrix: return "invalid-matrix";
    case ErrorCode::invalid_tolerance: return "invalid-tolerance";
    case ErrorCode::invalid_index: return "invalid-index";
    case ErrorCode::invalid_level: return "invalid-level";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_gauge: return "invalid-gauge";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::overflow_domain: return "overflow-domain";
    case ErrorCode::invariant_violation: return "invariant-violation";
  }
  return "unknown";
}

/// Largest |x| accepted by the exponential-type special functions.
inline constexpr real kOverflowLimit = 700.0;

inline void require_level(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_dimension, "level count must be >= 2, got " + std::to_string(n));
}

inline void require_index(int n, int j) {
  if (j < 0 || j >= n)
    throw Error(ErrorCode::invalid_index, "index " + std::to_string(j) + " outside [0, " + std::to_string(n) + ")");
}

inline void require_finite_argument(real x, real limit = kOverflowLimit) {
  if (!(std::abs(x) <= limit))
    throw Error(ErrorCode::overflow_domain, "|x| = " + std::to_string(x) + " exceeds " + std::to_string(limit));
}

/// Non-negative modulus, (a mod n) in [0, n).
constexpr int mod(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace superhyp

#endif  // SUPERHYP_CORE_HPP
