#include "ncdouble/ideal.hpp"

#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace ncd {

const char* to_string(Membership m) { return m == Membership::Member ? "Member" : "NotDetected"; }
const char* to_string(MembershipMode m) { return m == MembershipMode::Symbolic ? "symbolic" : "specialized"; }

namespace {

template <class K>
bool coeff_is_zero(const K& k) {
  return k.is_zero();
}

// incremental row echelon form over K, rows keyed by their highest column
template <class K>
class Echelon {
 public:
  using Row = std::map<int, K>;

  int column(const Word& w) {
    auto [it, inserted] = cols_.try_emplace(w, static_cast<int>(cols_.size()));
    return it->second;
  }
  std::optional<int> find_column(const Word& w) const {
    auto it = cols_.find(w);
    if (it == cols_.end()) return std::nullopt;
    return it->second;
  }

  void reduce(Row& r) const {
    while (!r.empty()) {
      auto top = std::prev(r.end());
      auto pv = pivots_.find(top->first);
      if (pv == pivots_.end()) return;
      K f = top->second;
      for (const auto& [c, v] : pv->second) {
        auto [it, inserted] = r.try_emplace(c, K());
        it->second -= f * v;
        if (coeff_is_zero(it->second)) r.erase(it);
      }
    }
  }

  void add(Row r) {
    reduce(r);
    if (r.empty()) return;
    K inv = std::prev(r.end())->second.inverse();
    for (auto& [c, v] : r) v *= inv;
    int lead = std::prev(r.end())->first;
    pivots_.emplace(lead, std::move(r));
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::unordered_map<Word, int, WordHash> cols_;
  std::map<int, Row> pivots_;
};

std::vector<std::vector<Word>> words_by_length(std::size_t letters, int max_len) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(std::max(max_len, 0)) + 1);
  out[0].push_back(Word{});
  for (int len = 1; len <= max_len; ++len)
    for (const Word& w : out[len - 1])
      for (std::size_t l = 0; l < letters; ++l) {
        Word x = w;
        x.push_back(static_cast<Letter>(l));
        out[len].push_back(std::move(x));
      }
  return out;
}

Scalar random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(2, 97);
  for (;;) {
    long p = dist(rng), q = dist(rng);
    if (std::gcd(p, q) != 1) continue;
    long sign = (rng() & 1) ? -1 : 1;
    return Scalar::rational(sign * p, q);
  }
}

GaussianRational evaluate(const Scalar& s, const Assignment& point) {
  if (s.is_constant()) return s.constant_value();
  return substitute(s, point).constant_value();
}

}  // namespace

struct IdealSpan::Impl {
  struct Trial {
    Assignment point;
    Echelon<GaussianRational> ech;
    std::mt19937_64 rng;
  };

  std::vector<NCPoly> relations;
  AlphabetPtr alphabet;
  MembershipOptions options;
  int bound = 0;
  std::vector<std::vector<Word>> words;
  std::optional<Echelon<Scalar>> symbolic;
  std::vector<Trial> trials;
  std::mutex mutex;

  template <class K, class F>
  void fill(Echelon<K>& ech, F&& coeff) {
    for (const auto& r : relations) {
      int room = bound - r.degree();
      std::vector<std::pair<Word, K>> base;
      for (const auto& [w, c] : r.terms()) base.emplace_back(w, coeff(c));
      for (int lu = 0; lu <= room; ++lu)
        for (int lv = 0; lu + lv <= room; ++lv)
          for (const Word& u : words[lu])
            for (const Word& v : words[lv]) {
              typename Echelon<K>::Row row;
              for (const auto& [w, c] : base) row.emplace(ech.column(u + w + v), c);
              ech.add(std::move(row));
            }
    }
  }

  void build_trial(Trial& t) {
    for (unsigned attempt = 0;; ++attempt) {
      t.point.clear();
      for (std::size_t k = 0; k < Param::count(); ++k)
        t.point[Param(static_cast<std::uint8_t>(k))] = random_point(t.rng);
      try {
        Echelon<GaussianRational> ech;
        fill(ech, [&](const Scalar& c) { return evaluate(c, t.point); });
        t.ech = std::move(ech);
        return;
      } catch (const PoleAtSubstitution&) {
        if (attempt + 1 >= options.retry_cap) throw;
      }
    }
  }

  template <class K, class F>
  static bool test(const Echelon<K>& ech, const NCPoly& p, F&& coeff) {
    typename Echelon<K>::Row row;
    for (const auto& [w, c] : p.terms()) {
      auto col = ech.find_column(w);
      if (!col) return false;
      row.emplace(*col, coeff(c));
    }
    ech.reduce(row);
    return row.empty();
  }
};

IdealSpan::IdealSpan(const std::vector<NCPoly>& relations, int degree_bound, const MembershipOptions& options)
    : impl_(std::make_unique<Impl>()), bound_(degree_bound) {
  Impl& im = *impl_;
  im.options = options;
  im.bound = degree_bound;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (!im.alphabet) im.alphabet = r.alphabet();
    else if (!same_alphabet(im.alphabet, r.alphabet())) throw AlphabetMismatch("relations over different alphabets");
    if (r.degree() <= degree_bound) im.relations.push_back(r);
  }
  im.words = words_by_length(im.alphabet ? im.alphabet->size() : 0, degree_bound);
  if (options.mode == MembershipMode::Symbolic) {
    im.symbolic.emplace();
    im.fill(*im.symbolic, [](const Scalar& c) { return c; });
    return;
  }
  if (options.trials == 0) throw InvalidParams("specialized mode needs at least one trial");
  im.trials.resize(options.trials);
  std::vector<std::future<void>> jobs;
  for (unsigned k = 0; k < options.trials; ++k) {
    im.trials[k].rng.seed(options.seed + 0x9E3779B97F4A7C15ull * k);
    jobs.push_back(std::async(std::launch::async, [&im, k] { im.build_trial(im.trials[k]); }));
  }
  for (auto& j : jobs) j.get();
}

IdealSpan::~IdealSpan() = default;
IdealSpan::IdealSpan(IdealSpan&&) noexcept = default;
IdealSpan& IdealSpan::operator=(IdealSpan&&) noexcept = default;

std::size_t IdealSpan::rank() const {
  return impl_->symbolic ? impl_->symbolic->rank() : impl_->trials.front().ech.rank();
}

Membership IdealSpan::contains(const NCPoly& p) const {
  if (p.degree() > bound_)
    throw BoundTooSmall("degree " + std::to_string(p.degree()) + " exceeds bound " + std::to_string(bound_));
  if (p.is_zero()) return Membership::Member;
  Impl& im = *impl_;
  if (im.alphabet && !same_alphabet(im.alphabet, p.alphabet()))
    throw AlphabetMismatch("polynomial is not over the relations' alphabet");
  if (im.symbolic)
    return Impl::test(*im.symbolic, p, [](const Scalar& c) { return c; }) ? Membership::Member
                                                                            : Membership::NotDetected;
  std::lock_guard lock(im.mutex);
  for (auto& t : im.trials) {
    for (unsigned attempt = 0;; ++attempt) {
      try {
        if (!Impl::test(t.ech, p, [&](const Scalar& c) { return evaluate(c, t.point); }))
          return Membership::NotDetected;
        break;
      } catch (const PoleAtSubstitution&) {
        if (attempt + 1 >= im.options.retry_cap) throw;
        im.build_trial(t);
      }
    }
  }
  return Membership::Member;
}

Membership ideal_membership(const std::vector<NCPoly>& relations, const NCPoly& p, int degree_bound,
                            const MembershipOptions& options) {
  if (p.degree() > degree_bound)
    throw BoundTooSmall("degree " + std::to_string(p.degree()) + " exceeds bound " + std::to_string(degree_bound));
  return IdealSpan(relations, degree_bound, options).contains(p);
}

}  // namespace ncd
