#include "tcl/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace tcl {

namespace {

void check_degree(int r) {
  if (r < 1 || r > kMaxPermDegree)
    throw capability_error("permutation degree must be in 1.." +
                           std::to_string(kMaxPermDegree) + ", got " + std::to_string(r));
}

}  // namespace

Permutation Permutation::identity(int r) {
  check_degree(r);
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 1);
  return from_images(img);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  check_degree(static_cast<int>(images.size()));
  int r = static_cast<int>(images.size());
  std::array<bool, kMaxPermDegree> seen{};
  Permutation p;
  p.r_ = static_cast<uint8_t>(r);
  p.img_.fill(0);
  for (int i = 0; i < r; ++i) {
    int v = images[i];
    if (v < 1 || v > r) throw argument_error("permutation image out of range");
    if (seen[v - 1]) throw argument_error("permutation image repeated");
    seen[v - 1] = true;
    p.img_[i] = static_cast<uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(int r, const std::string& text) {
  check_degree(r);
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 1);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && text.compare(pos, 2, "id") == 0) pos += 2;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw parse_error("cycle notation: expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw parse_error("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("cycle notation: expected digit");
      // single digits suffice for r <= 8; accept multi-digit for robustness
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        if (r < 10) break;
      }
      if (v < 1 || v > r) throw parse_error("cycle notation: point out of range");
      cyc.push_back(v);
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (img[from - 1] != from) throw parse_error("cycle notation: point repeated");
      img[from - 1] = to;
    }
    // a point may not appear in two cycles; the check above catches reuse as
    // a cycle head but not as a tail, so recheck bijectivity at the end
  }
  return from_images(img);
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (r_ != rhs.r_) throw dimension_error("compose: degree mismatch");
  Permutation p;
  p.r_ = r_;
  p.img_.fill(0);
  for (int i = 1; i <= r_; ++i) p.img_[i - 1] = img_[rhs.img_[i - 1] - 1];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.r_ = r_;
  p.img_.fill(0);
  for (int i = 1; i <= r_; ++i) p.img_[img_[i - 1] - 1] = static_cast<uint8_t>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= r_; ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::array<bool, kMaxPermDegree> seen{};
  std::vector<int> type;
  for (int i = 1; i <= r_; ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    int j = i;
    do {
      seen[j - 1] = true;
      j = img_[j - 1];
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::array<bool, kMaxPermDegree> seen{};
  bool any = false;
  for (int i = 1; i <= r_; ++i) {
    if (seen[i - 1] || img_[i - 1] == i) {
      seen[i - 1] = true;
      continue;
    }
    any = true;
    out << '(';
    int j = i;
    do {
      seen[j - 1] = true;
      out << j;
      j = img_[j - 1];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

uint32_t Permutation::factorial(int r) {
  check_degree(r);
  uint32_t f = 1;
  for (int i = 2; i <= r; ++i) f *= static_cast<uint32_t>(i);
  return f;
}

uint32_t Permutation::rank() const {
  // Lehmer code, most-significant digit first.
  uint32_t rank = 0;
  for (int i = 0; i < r_; ++i) {
    uint32_t smaller = 0;
    for (int j = i + 1; j < r_; ++j)
      if (img_[j] < img_[i]) ++smaller;
    rank = rank * static_cast<uint32_t>(r_ - i) + smaller;
  }
  return rank;
}

Permutation Permutation::unrank(int r, uint32_t rank) {
  check_degree(r);
  std::vector<int> digits(r);
  for (int i = r - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(rank % static_cast<uint32_t>(r - i));
    rank /= static_cast<uint32_t>(r - i);
  }
  std::vector<int> pool(r);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img(r);
  for (int i = 0; i < r; ++i) {
    img[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return from_images(img);
}

Permutation compose(const Permutation& p, const Permutation& q) { return p.compose(q); }

Permutation cyc_power(int r, int k) {
  if (r < 2 || r > kMaxPermDegree) throw capability_error("cyc_power: degree out of range");
  if (((k % r) + r) % r == 0)
    throw invalid_residue_error("cyc_power: k = 0 (mod r) does not name a residue family");
  int kk = ((k % r) + r) % r;
  std::vector<int> img(r);
  for (int i = 1; i <= r; ++i) img[i - 1] = 1 + (i - 1 + kk) % r;
  return Permutation::from_images(img);
}

}  // namespace tcl
