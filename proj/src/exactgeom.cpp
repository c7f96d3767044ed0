#include "minkowski/exactgeom.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace minkowski {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rat out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("malformed rational: '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
    out = Rat(n, d);
    out.canonicalize();
  } else if (auto dot_pos = body.find('.'); dot_pos != std::string_view::npos) {
    auto ip = body.substr(0, dot_pos);
    auto fp = body.substr(dot_pos + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw InputError("malformed decimal: '" + std::string(s) + "'");
    std::string digits = std::string(ip) + std::string(fp);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    out = Rat(n, d);
    out.canonicalize();
  } else {
    if (!all_digits(body)) throw InputError("malformed rational: '" + std::string(s) + "'");
    out = Rat(mpz_class(std::string(body), 10));
  }
  return negative ? Rat(-out) : out;
}

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& x) { return x == 0; });
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vec& Vec::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= Rat(-1); }
Vec operator*(const Rat& s, Vec a) { return a *= s; }

Rat dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "inner product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Vec concat(const Vec& x, const Vec& y) {
  std::vector<Rat> c(x.begin(), x.end());
  c.insert(c.end(), y.begin(), y.end());
  return Vec(std::move(c));
}

Vec parse_vec(std::string_view csv) {
  std::vector<Rat> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = csv.find(',', start);
    coords.push_back(parse_rat(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vec(std::move(coords));
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::size_t rank(const std::vector<Vec>& input) {
  if (input.empty()) return 0;
  std::vector<Vec> m = input;
  const std::size_t cols = m.front().dim();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int affine_dimension(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs));
}

bool solve_square(std::vector<Vec> a, Vec b, Vec& x) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  x = Vec(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.dim() != b.dim())
    throw InputError(std::string("dimension mismatch in ") + what + ": " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

}  // namespace minkowski
