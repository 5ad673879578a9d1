#pragma once

// Shared text rendering for the polynomial types. Output is accepted back by
// the expression parser.

#include <string>

#include "wwgm/scalar.hpp"

namespace wwgm::detail {

inline std::string power(const std::string& base, int e) {
  if (e == 0) return {};
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

inline void append_factor(std::string& out, const std::string& f) {
  if (f.empty()) return;
  if (!out.empty()) out += "*";
  out += f;
}

class TermJoiner {
 public:
  void add(const Scalar& coeff, const std::string& mono) {
    std::string t;
    if (mono.empty()) {
      t = coeff.to_string();
    } else if (coeff == Scalar(1)) {
      t = mono;
    } else if (coeff == Scalar(-1)) {
      t = "-" + mono;
    } else if (coeff.is_atomic()) {
      t = coeff.to_string() + "*" + mono;
    } else {
      t = "(" + coeff.to_string() + ")*" + mono;
    }
    if (out_.empty()) {
      out_ = t;
    } else if (t.front() == '-') {
      out_ += " - " + t.substr(1);
    } else {
      out_ += " + " + t;
    }
  }

  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

}  // namespace wwgm::detail
