#include "jackhg/partition.hpp"

#include <algorithm>
#include <sstream>

namespace jackhg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw BadInput("Partition: negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw BadInput("Partition: parts not weakly decreasing");
    if (parts_[i] == 0) throw BadInput("Partition: interior zero part");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(parts_[0]);
  for (int j = 1; j <= parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    conj[j - 1] = count;
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

bool Partition::covers(const Partition& mu) const {
  return contains(mu) && size() == mu.size() + 1;
}

bool Partition::dominates(const Partition& mu) const {
  if (size() != mu.size()) return false;
  int sl = 0, sm = 0;
  int len = std::max(length(), mu.length());
  for (int i = 1; i <= len; ++i) {
    sl += part(i);
    sm += mu.part(i);
    if (sl < sm) return false;
  }
  return true;
}

bool Partition::add_box(int row, Partition* out) const {
  if (row < 1) return false;
  if (row > 1 && part(row - 1) == part(row)) return false;  // not a partition
  std::vector<int> p = parts_;
  if (row > static_cast<int>(p.size())) {
    if (row != static_cast<int>(p.size()) + 1) return false;
    p.push_back(1);
  } else {
    ++p[row - 1];
  }
  *out = Partition(std::move(p));
  return true;
}

bool Partition::remove_box(int row, Partition* out) const {
  if (row < 1 || row > length()) return false;
  if (row < length() && parts_[row - 1] == parts_[row]) return false;
  std::vector<int> p = parts_;
  --p[row - 1];
  *out = Partition(std::move(p));
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

BoxStats box_stats(const Partition& lambda, int i, int j) {
  if (i < 1 || j < 1 || i > lambda.length() || j > lambda.part(i))
    throw BadInput("box_stats: box outside diagram");
  Partition conj = lambda.conjugate();
  return BoxStats{lambda.part(i) - j, j - 1, conj.part(j) - i, i - 1};
}

std::vector<Partition> covers_of(const Partition& mu, int n) {
  std::vector<Partition> out;
  for (int row = 1; row <= std::min(mu.length() + 1, n); ++row) {
    Partition lam;
    if (mu.add_box(row, &lam)) out.push_back(std::move(lam));
  }
  return out;
}

std::vector<Partition> covered_by(const Partition& lambda) {
  std::vector<Partition> out;
  for (int row = 1; row <= lambda.length(); ++row) {
    Partition mu;
    if (lambda.remove_box(row, &mu)) out.push_back(std::move(mu));
  }
  return out;
}

Rational rho(const Partition& lambda, const Rational& alpha) {
  if (is_zero(alpha)) throw BadInput("rho: alpha = 0");
  Rational acc(0);
  for (int i = 1; i <= lambda.length(); ++i) {
    long li = lambda.part(i);
    acc += Rational(li * (li - 1), 2) - Rational(li * (i - 1)) / alpha;
  }
  acc.canonicalize();
  return acc;
}

Rational rho_skew(const Partition& lambda, const Partition& mu,
                  const Rational& alpha) {
  return rho(lambda, alpha) - rho(mu, alpha);
}

Rational pochhammer(const Rational& a, int m) {
  Rational acc(1);
  for (int k = 0; k < m; ++k) acc *= a + k;
  return acc;
}

Rational alpha_pochhammer(const Rational& a, const Partition& lambda,
                          const Rational& alpha) {
  if (is_zero(alpha)) throw BadInput("alpha_pochhammer: alpha = 0");
  Rational acc(1);
  for (int i = 1; i <= lambda.length(); ++i)
    acc *= pochhammer(a - Rational(i - 1) / alpha, lambda.part(i));
  return acc;
}

Rational alpha_pochhammer(const std::vector<Rational>& as,
                          const Partition& lambda, const Rational& alpha) {
  Rational acc(1);
  for (const auto& a : as) acc *= alpha_pochhammer(a, lambda, alpha);
  return acc;
}

Rational poch_ratio(const Rational& a, const Partition& lambda,
                    const Partition& mu, const Rational& alpha) {
  if (!lambda.covers(mu)) throw BadInput("poch_ratio: lambda must cover mu");
  return a + rho_skew(lambda, mu, alpha);
}

HookProducts hooks(const Partition& lambda, const Rational& alpha) {
  if (is_zero(alpha)) throw BadInput("hooks: alpha = 0");
  Partition conj = lambda.conjugate();
  Rational c(1), cp(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      int arm = lambda.part(i) - j;
      int leg = conj.part(j) - i;
      c *= Rational(arm) * alpha + (leg + 1);
      cp *= Rational(arm + 1) * alpha + leg;
    }
  }
  return HookProducts{c, cp, c * cp};
}

namespace {
void gen_partitions(int remaining, int max_part, int max_len,
                    std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int d, int n) {
  if (d < 0 || n < 0) throw BadInput("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(d, d, n, cur, out);
  return out;
}

std::vector<Partition> reverse_lex_order(int d, int n) {
  // gen_partitions emits first parts in decreasing order, which is exactly
  // the reverse-lexicographic descending order.
  return partitions_of(d, n);
}

}  // namespace jackhg
