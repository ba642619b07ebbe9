#include "hermite/mask.hpp"

#include <json.hpp>

#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

Mask::Mask(unsigned d, long support_min, std::vector<RatMatrix> coefficients)
    : d_(d), support_min_(support_min), coeffs_(std::move(coefficients)), zero_(d + 1, d + 1) {
  if (d_ < 1) throw DomainError("mask order d must be at least 1");
  for (const auto& c : coeffs_) {
    if (c.rows() != dim() || c.cols() != dim()) throw DimensionError("mask coefficient is not (d+1)x(d+1)");
  }
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  std::size_t last = coeffs_.size();
  while (last > first && coeffs_[last - 1].is_zero()) --last;
  if (first == last) {
    coeffs_.clear();
    support_min_ = 0;
    return;
  }
  coeffs_ = std::vector<RatMatrix>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
  support_min_ += static_cast<long>(first);
}

Mask Mask::zero(unsigned d) { return Mask(d, 0, {}); }

const RatMatrix& Mask::at(long j) const {
  if (coeffs_.empty() || j < support_min() || j > support_max()) return zero_;
  return coeffs_[static_cast<std::size_t>(j - support_min_)];
}

Mask Mask::reflected() const {
  if (is_zero()) return *this;
  std::vector<RatMatrix> rev(coeffs_.rbegin(), coeffs_.rend());
  return Mask(d_, -support_max(), std::move(rev));
}

RatMatrix dilation_matrix(unsigned d) {
  RatVector diag(d + 1);
  for (unsigned j = 0; j <= d; ++j) diag[j] = Rational::pow2(-static_cast<long>(j));
  return RatMatrix::diagonal(diag);
}

RatMatrix parity_moment(const Mask& mask, unsigned r, int parity) {
  RatMatrix acc(mask.dim(), mask.dim());
  for (long n = mask.support_min(); n <= mask.support_max() && !mask.is_zero(); ++n) {
    if (((n % 2) + 2) % 2 != parity) continue;
    acc += Rational(n).pow(r) * mask.at(n);
  }
  return acc;
}

RatMatrix moment(const Mask& mask, unsigned r) {
  return parity_moment(mask, r, 0) + parity_moment(mask, r, 1);
}

RatMatrix alt_moment(const Mask& mask, unsigned r) {
  return parity_moment(mask, r, 0) - parity_moment(mask, r, 1);
}

bool is_interpolatory(const Mask& mask) {
  if (mask.at(0) != dilation_matrix(mask.d())) return false;
  for (long j = mask.support_min(); j <= mask.support_max() && !mask.is_zero(); ++j) {
    if (j != 0 && j % 2 == 0 && !mask.at(j).is_zero()) return false;
  }
  return true;
}

bool is_mirror_symmetric(const Mask& mask) {
  RatVector signs(mask.dim());
  for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = i % 2 == 0 ? 1 : -1;
  const RatMatrix e = RatMatrix::diagonal(signs);
  if (mask.is_zero()) return true;
  if (mask.support_min() != -mask.support_max()) return false;
  for (long j = mask.support_min(); j <= mask.support_max(); ++j) {
    if (mask.at(-j) != e * mask.at(j) * e) return false;
  }
  return true;
}

namespace {

using nlohmann::json;

Rational parse_entry(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("expected a rational string", where);
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  }
}

long parse_integer(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'", key);
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError("expected an integer", key);
  return v.get<long>();
}

}  // namespace

Mask parse_mask(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("mask document must be a JSON object", "$");

  const long d = parse_integer(doc, "d");
  if (d < 1) throw ParseError("d must be at least 1", "d");
  const long support_min = parse_integer(doc, "support_min");
  if (!doc.contains("coefficients") || !doc.at("coefficients").is_array()) {
    throw ParseError("expected an array of matrices", "coefficients");
  }
  const json& mats = doc.at("coefficients");
  if (mats.empty()) throw ParseError("mask has no coefficients", "coefficients");

  const auto n = static_cast<std::size_t>(d) + 1;
  std::vector<RatMatrix> coeffs;
  coeffs.reserve(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const std::string mwhere = "coefficients[" + std::to_string(i) + "]";
    const json& m = mats[i];
    if (!m.is_array() || m.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " rows for d=" + std::to_string(d), mwhere);
    }
    RatMatrix mat(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::string rwhere = mwhere + "[" + std::to_string(r) + "]";
      const json& row = m[r];
      if (!row.is_array() || row.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " entries", rwhere);
      }
      for (std::size_t c = 0; c < n; ++c) {
        mat(r, c) = parse_entry(row[c], rwhere + "[" + std::to_string(c) + "]");
      }
    }
    coeffs.push_back(std::move(mat));
  }
  Mask mask(static_cast<unsigned>(d), support_min, std::move(coeffs));
  if (mask.is_zero()) throw ParseError("mask support is entirely zero", "coefficients");
  return mask;
}

std::string serialize_mask(const Mask& mask) {
  std::ostringstream out;
  out << "{\"d\": " << mask.d() << ", \"support_min\": " << mask.support_min() << ", \"coefficients\": [";
  for (std::size_t i = 0; i < mask.coefficients().size(); ++i) {
    const RatMatrix& m = mask.coefficients()[i];
    if (i > 0) out << ", ";
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r > 0) out << ',';
      out << '[';
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) out << ',';
        out << '"' << m(r, c).to_string() << '"';
      }
      out << ']';
    }
    out << ']';
  }
  out << "]}\n";
  return out.str();
}

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Mask han05_a1() {
  return Mask(1, -2,
              {
                  RatMatrix{{q(1, 128), q(7, 256)}, {q(0), q(1, 16)}},
                  RatMatrix{{q(1, 2), q(-1, 16)}, {q(15, 16), q(-7, 32)}},
                  RatMatrix{{q(63, 64), q(0)}, {q(0), q(3, 8)}},
                  RatMatrix{{q(1, 2), q(1, 16)}, {q(-15, 16), q(-7, 32)}},
                  RatMatrix{{q(1, 128), q(-7, 256)}, {q(0), q(1, 16)}},
              });
}

Mask han05_a2() {
  return Mask(1, -2,
              {
                  RatMatrix{{q(7, 96), q(-25, 1344)}, {q(77, 384), q(-19, 384)}},
                  RatMatrix{{q(1, 2), q(-5, 56)}, {q(7, 12), q(-1, 24)}},
                  RatMatrix{{q(41, 48), q(0)}, {q(0), q(19, 96)}},
                  RatMatrix{{q(1, 2), q(5, 56)}, {q(-7, 12), q(-1, 24)}},
                  RatMatrix{{q(7, 96), q(25, 1344)}, {q(-77, 384), q(-19, 384)}},
              });
}

}  // namespace

std::vector<std::string> catalog_names() { return {"han05_a1", "han05_a2"}; }

Mask catalog(std::string_view name) {
  if (name == "han05_a1") return han05_a1();
  if (name == "han05_a2") return han05_a2();
  std::string names;
  for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw DomainError("unknown catalog mask '" + std::string(name) + "'; available: " + names);
}

}  // namespace hermite
