#pragma once

#include "bac/rational.hpp"

namespace bac {

// The unit square of parameter pairs splits along the anti-diagonal p+q=1:
// below it the channel is reasonable, on it the channel destroys all
// information, above it the channel is "worse than useless".  The lower
// triangle splits again along p=q into the canonical triangle T (p <= q)
// and its mirror T'.
enum class Region { triangle_t, triangle_t_prime, noisy_line, upper_square };

enum class Reasonableness { reasonable, noisy, unreasonable };

class ChannelParams {
 public:
  ChannelParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ < 0 || p_ > 1 || q_ < 0 || q_ > 1)
      throw std::domain_error("channel parameters must lie in [0,1]");
    if ((p_ == 0 && q_ == 0) || (p_ == 1 && q_ == 1))
      throw std::domain_error("(0,0) and (1,1) are degenerate, not channels");
    Rational s = p_ + q_;
    if (s < 1)
      region_ = p_ <= q_ ? Region::triangle_t : Region::triangle_t_prime;
    else if (s == 1)
      region_ = Region::noisy_line;
    else
      region_ = Region::upper_square;
  }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  Region region() const { return region_; }

  // true when neither parameter sits on {0,1}
  bool interior() const {
    return p_ != 0 && p_ != 1 && q_ != 0 && q_ != 1;
  }

  bool is_bsc() const { return p_ == q_; }
  bool is_z() const { return p_ == 0; }

  ChannelParams swapped() const { return ChannelParams(q_, p_); }
  // phi(p,q) = (1-q, 1-p); an involution of the square fixing the noisy line
  ChannelParams involuted() const {
    return ChannelParams(Rational(1) - q_, Rational(1) - p_);
  }

  friend bool operator==(const ChannelParams& a, const ChannelParams& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  Rational p_, q_;
  Region region_;
};

inline Reasonableness reasonableness(const ChannelParams& ch) {
  switch (ch.region()) {
    case Region::noisy_line:
      return Reasonableness::noisy;
    case Region::upper_square:
      return Reasonableness::unreasonable;
    default:
      return Reasonableness::reasonable;
  }
}

inline ChannelParams make_channel(std::string_view p, std::string_view q) {
  return ChannelParams(parse_rational(p), parse_rational(q));
}

}  // namespace bac
