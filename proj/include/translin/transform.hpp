#pragma once

#include <span>
#include <string>
#include <vector>

namespace translin {

/// Monotone non-decreasing map on [0, inf), built from a small catalog of
/// primitive stages and their compositions. Stages apply first to last.
class MonotoneTransform {
 public:
  enum class Kind { identity, square, square_root, power, scale, affine };

  struct Stage {
    Kind kind = Kind::identity;
    double a = 1.0;  // power: exponent k; scale: factor R; affine: slope
    double b = 0.0;  // affine: offset
    friend bool operator==(const Stage&, const Stage&) = default;
  };

  MonotoneTransform() : MonotoneTransform(Stage{}) {}

  static MonotoneTransform identity() { return MonotoneTransform(Stage{Kind::identity}); }
  static MonotoneTransform square() { return MonotoneTransform(Stage{Kind::square}); }
  static MonotoneTransform square_root() { return MonotoneTransform(Stage{Kind::square_root}); }
  static MonotoneTransform power(double exponent);
  static MonotoneTransform scale(double factor);
  static MonotoneTransform affine(double slope, double offset);

  /// outer(inner(v)).
  static MonotoneTransform compose(const MonotoneTransform& outer, const MonotoneTransform& inner);

  double operator()(double v) const noexcept;
  std::span<const Stage> stages() const noexcept { return stages_; }
  /// Lower end of the image of [0, inf).
  double image_floor() const noexcept;
  std::string describe() const;

  friend bool operator==(const MonotoneTransform&, const MonotoneTransform&) = default;

 private:
  explicit MonotoneTransform(Stage stage);
  explicit MonotoneTransform(std::vector<Stage> stages);
  std::vector<Stage> stages_;
};

/// Parses "identity", "square", "square_root"/"sqrt", "power:K", "scale:R",
/// "affine:A:B", and compositions joined with '*' (outer first), e.g.
/// "scale:2*square_root".
MonotoneTransform parse_transform(const std::string& text);

}  // namespace translin
