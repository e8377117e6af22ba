#include "metafusion/group_table.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace metafusion {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::string to_string(TableSource s) {
  switch (s) {
    case TableSource::MetacyclicParams: return "metacyclic-params";
    case TableSource::PermutationGenerators: return "permutation-generators";
    case TableSource::Quotient: return "quotient";
    case TableSource::SubgroupRestriction: return "subgroup-restriction";
  }
  return "unknown";
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

long long two_part(long long n) { return n / odd_part(n); }

long long odd_part(long long n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

GroupTablePtr GroupTable::create(std::vector<std::vector<int>> mul,
                                 std::vector<std::string> labels,
                                 TableSource source) {
  const int n = static_cast<int>(mul.size());
  require(n >= 1, "group table: order must be at least 1");
  require(n <= kMaxOrder, "group table: order exceeds hard cap");
  require(static_cast<int>(labels.size()) == n,
          "group table: label count must equal order");

  auto t = std::shared_ptr<GroupTable>(new GroupTable());
  t->order_ = n;
  t->source_ = source;
  t->labels_ = std::move(labels);
  t->mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    require(static_cast<int>(mul[a].size()) == n, "group table: ragged row");
    for (int b = 0; b < n; ++b) {
      const int c = mul[a][b];
      require(c >= 0 && c < n, "group table: entry out of range");
      t->mul_[static_cast<size_t>(a) * n + b] = c;
    }
  }

  if (source == TableSource::MetacyclicParams) {
    require(is_power_of_two(n), "group table: metacyclic source must have 2-power order");
  }

  // identity at index 0
  for (int g = 0; g < n; ++g) {
    require(t->mul(0, g) == g && t->mul(g, 0) == g,
            "group table: index 0 is not a two-sided identity");
  }

  // two-sided inverses (a right inverse that is also a left inverse)
  t->inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (t->mul(g, h) == 0) {
        require(t->mul(h, g) == 0, "group table: inverse is one-sided");
        t->inv_[g] = h;
        break;
      }
    }
    require(t->inv_[g] >= 0, "group table: element without inverse");
  }

  // associativity: exhaustive up to order 64, sampled above
  auto assoc = [&t](int a, int b, int c) {
    return t->mul(t->mul(a, b), c) == t->mul(a, t->mul(b, c));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          require(assoc(a, b, c), "group table: associativity failure");
  } else {
    std::mt19937 rng(0xC0FFEEu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      require(assoc(pick(rng), pick(rng), pick(rng)),
              "group table: associativity failure (sampled)");
    }
  }

  t->orders_.assign(n, 0);
  for (int g = 0; g < n; ++g) {
    int k = 1, p = g;
    while (p != 0) {
      p = t->mul(p, g);
      ++k;
    }
    t->orders_[g] = k;
  }

  t->abelian_ = true;
  for (int a = 0; a < n && t->abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t->mul(a, b) != t->mul(b, a)) {
        t->abelian_ = false;
        break;
      }

  return t;
}

int GroupTable::power(int g, long long e) const {
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  int acc = 0, base = g;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long long GroupTable::exponent() const {
  long long e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, static_cast<long long>(orders_[g]));
  return e;
}

bool GroupTable::is_2_group() const { return is_power_of_two(order_); }

}  // namespace metafusion
