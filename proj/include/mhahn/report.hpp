// Verification reports.  Every identity check walks a grid, tracks the worst
// residual against a backend tolerance, and records the first failing point.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhahn/matrix.hpp"
#include "mhahn/scalar.hpp"

namespace mhahn {

struct Tolerance {
  Scalar rel;  // pass iff |residual| <= rel * (1 + scale); exact backend: 0

  static Tolerance exact() { return {Scalar::exact(0)}; }
  static Tolerance for_backend(Backend b, double rel = 1e-9) {
    return b == Backend::Exact ? Tolerance{Scalar::exact(0)} : Tolerance{Scalar::real(rel)};
  }
  bool ok(const Scalar& residual_abs, const Scalar& scale) const {
    if (rel.is_exact()) return residual_abs.is_zero();
    return !(rel * (Scalar::one(Backend::Float) + scale) < residual_abs);
  }
};

struct Witness {
  std::vector<long> index;
  std::string value;  // residual at the witness point
};

struct IdentityReport {
  std::string name;
  std::size_t grid = 0;  // points checked
  Scalar max_residual;   // same backend as the run
  bool pass = true;
  std::optional<Witness> witness;  // first failure
  std::string note;                // optional diagnostic, never gates pass
};

class ResidualTracker {
 public:
  ResidualTracker(std::string name, Tolerance tol, Backend backend);

  void observe(std::vector<long> index, const Scalar& residual, const Scalar& scale);
  /// one observation per entry of a residual matrix, indexed (i, j)
  void observe_matrix(const Matrix& residual, const Scalar& scale,
                      std::vector<long> prefix = {});
  void set_note(std::string note) { note_ = std::move(note); }

  bool passing() const { return pass_; }
  IdentityReport report() const;

 private:
  std::string name_;
  Tolerance tol_;
  Scalar max_residual_;
  std::size_t grid_ = 0;
  bool pass_ = true;
  std::optional<Witness> witness_;
  std::string note_;
};

}  // namespace mhahn
