#include "qalcove/weight.hpp"

#include <algorithm>
#include <charconv>

#include "qalcove/errors.hpp"

namespace qalcove {

Weight Weight::parse(std::string_view text, std::size_t rank) {
  std::vector<value_type> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ValidationError("malformed weight '" + std::string(text) + "': expected comma-separated integers");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != rank) {
    throw ValidationError("weight '" + std::string(text) + "' has " + std::to_string(out.size()) +
                          " coordinates, expected " + std::to_string(rank));
  }
  return Weight(std::move(out));
}

bool Weight::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](value_type x) { return x == 0; });
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](value_type x) { return x >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw ValidationError("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw ValidationError("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(value_type k) {
  for (auto& x : c_) x *= k;
  return *this;
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : w) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace qalcove
