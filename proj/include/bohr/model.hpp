#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace bohr {

// Order alpha of the class, validated into [0,1).
class Alpha {
 public:
  explicit Alpha(double value);

  double value() const { return value_; }
  // 1 - alpha; every coefficient bound carries the factor 2(1 - alpha).
  double complement() const { return 1.0 - value_; }

  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

// 2(1-alpha)/n, the sharp bound on |a_n| + |b_n| (and on |a_n| alone).
double coeff_bound(int n, Alpha alpha);

// 1 + 2(1-alpha)(ln 2 - 1): distance from f(0) to the image boundary of the
// extremal map, and the lower bound of that distance over the class.
double distance_bound(Alpha alpha);

// Growth majorant r + sum_{n>=2} 2(1-alpha) r^n / n, r in [0,1).
double majorant(double r, Alpha alpha);

// Growth minorant r + sum_{n>=2} 2(1-alpha)(-1)^(n-1) r^n / n, r in [0,1].
double minorant(double r, Alpha alpha);

// alpha + (1-alpha)(1+r)/(1-r): bound on |h'(z)| at |z| = r, hence on the
// square root of the Jacobian.
double jacobian_sqrt_bound(double r, Alpha alpha);

struct ProfileRow {
  int n = 2;
  double sum_bound = 0.0;  // bound on |a_n| + |b_n|
  double a_bound = 0.0;    // bound on |a_n|
};

// Worst-case coefficient data of a class member. Only the channels the
// functionals consume are stored: |a_n|+|b_n|, |a_n| and |a_2|+|b_2|.
// Indices that were never given fall back to the sharp class bound.
class CoefficientProfile {
 public:
  static CoefficientProfile extremal(Alpha alpha);

  // Throws ProfileError when a row breaks the class bounds. The second
  // coefficient |a_2|+|b_2| is known only when row n = 2 is listed.
  static CoefficientProfile from_rows(Alpha alpha,
                                      const std::vector<ProfileRow>& rows);

  Alpha alpha() const { return alpha_; }
  double sum_bound(int n) const;
  double a_bound(int n) const;
  std::optional<double> second_coeff() const { return second_; }
  bool is_extremal() const { return extremal_; }

 private:
  explicit CoefficientProfile(Alpha alpha) : alpha_(alpha) {}

  Alpha alpha_;
  std::vector<double> sums_;  // index n - 2
  std::vector<double> as_;
  std::optional<double> second_;
  bool extremal_ = false;
};

CoefficientProfile extremal_profile(Alpha alpha);

// Reads the plain-text profile format:
//
//   alpha=0.3
//   n,c_n,a_n_bound
//   2,0.6,0.5
//   3,0.4,0.4
//
// Blank lines and lines starting with '#' are ignored.
CoefficientProfile read_profile(std::istream& in);

}  // namespace bohr
