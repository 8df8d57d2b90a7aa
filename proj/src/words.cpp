#include "coxsep/words.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "coxsep/errors.hpp"

namespace coxsep {

namespace {

// Right multiplication of a reduced (not necessarily lex-least) word.
void append_reduced(std::vector<Generator>& word, Generator s, const std::vector<GeneratorMask>& link) {
  for (std::size_t j = word.size(); j-- > 0;) {
    if (word[j] == s) {
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
    if (!((link[s] >> word[j]) & 1U)) break;
  }
  word.push_back(s);
}

// Left multiplication of a reduced word.
void prepend_reduced(std::vector<Generator>& word, Generator s, const std::vector<GeneratorMask>& link) {
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] == s) {
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
    if (!((link[s] >> word[j]) & 1U)) break;
  }
  word.insert(word.begin(), s);
}

}  // namespace

CoxeterGroup::CoxeterGroup(const SimplicialGraph& graph)
    : graph_(graph), labels_(graph.labels()) {
  link_.resize(rank());
  for (std::size_t s = 0; s < rank(); ++s) link_[s] = graph.neighbours(s);

  // Cliques by extension in increasing generator order.
  cliques_.push_back(0);
  for (std::size_t i = 0; i < cliques_.size(); ++i) {
    const GeneratorMask c = cliques_[i];
    const std::size_t start = c == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(c));
    for (std::size_t s = start; s < rank(); ++s) {
      if ((c & ~link_[s]) == 0) cliques_.push_back(c | bit(static_cast<Generator>(s)));
    }
  }
}

void CoxeterGroup::check(Generator s) const {
  if (s >= rank()) {
    throw InvalidArgument("generator index " + std::to_string(s) + " out of range");
  }
}

GroupElement CoxeterGroup::generator(Generator s) const {
  check(s);
  return GroupElement::from_normal_form({s});
}

std::vector<Generator> CoxeterGroup::lex_normalize(const std::vector<Generator>& reduced) const {
  const std::size_t n = rank();
  const std::size_t len = reduced.size();
  // Occurrence lists per letter; next[a] indexes the first unconsumed one.
  std::vector<std::vector<std::size_t>> occurrences(n);
  for (std::size_t i = 0; i < len; ++i) occurrences[reduced[i]].push_back(i);
  std::vector<std::size_t> next(n, 0);
  auto position = [&](std::size_t a) -> std::size_t {
    return next[a] < occurrences[a].size() ? occurrences[a][next[a]] : len;
  };
  GeneratorMask present = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!occurrences[a].empty()) present |= bit(static_cast<Generator>(a));
  }

  std::vector<Generator> out;
  out.reserve(len);
  while (out.size() < len) {
    bool advanced = false;
    for (GeneratorMask m = present; m != 0; m &= m - 1) {
      const auto a = static_cast<Generator>(std::countr_zero(m));
      const std::size_t pa = position(a);
      bool free = true;
      GeneratorMask blockers = present & ~link_[a] & ~bit(a);
      for (; blockers != 0; blockers &= blockers - 1) {
        if (position(static_cast<std::size_t>(std::countr_zero(blockers))) < pa) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      out.push_back(a);
      if (++next[a] == occurrences[a].size()) present &= ~bit(a);
      advanced = true;
      break;
    }
    if (!advanced) throw InvariantBreach("lex_normalize: no available letter");
  }
  return out;
}

GroupElement CoxeterGroup::reduce(std::span<const Generator> word) const {
  std::vector<Generator> reduced;
  reduced.reserve(word.size());
  for (Generator s : word) {
    check(s);
    append_reduced(reduced, s, link_);
  }
  return GroupElement::from_normal_form(lex_normalize(reduced));
}

void CoxeterGroup::times_in_place(std::vector<Generator>& letters, Generator s) const {
  std::size_t after = 0;  // first index after the last letter not commuting with s
  for (std::size_t j = letters.size(); j-- > 0;) {
    if (letters[j] == s) {
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
    if (!commute(letters[j], s)) {
      after = j + 1;
      break;
    }
  }
  std::size_t q = after;
  while (q < letters.size() && letters[q] < s) ++q;
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(q), s);
}

GroupElement CoxeterGroup::times(const GroupElement& a, Generator s) const {
  check(s);
  std::vector<Generator> letters = a.letters();
  times_in_place(letters, s);
  return GroupElement::from_normal_form(std::move(letters));
}

GroupElement CoxeterGroup::times(Generator s, const GroupElement& a) const {
  check(s);
  std::vector<Generator> letters = a.letters();
  prepend_reduced(letters, s, link_);
  return GroupElement::from_normal_form(lex_normalize(letters));
}

GroupElement CoxeterGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (b.length() <= 8) {
    std::vector<Generator> letters = a.letters();
    for (Generator s : b.letters()) times_in_place(letters, s);
    return GroupElement::from_normal_form(std::move(letters));
  }
  std::vector<Generator> reduced = a.letters();
  for (Generator s : b.letters()) append_reduced(reduced, s, link_);
  return GroupElement::from_normal_form(lex_normalize(reduced));
}

std::size_t CoxeterGroup::product_length(const GroupElement& a, const GroupElement& b) const {
  if (a.length() < b.length()) {
    std::vector<Generator> reduced = b.letters();
    for (std::size_t j = a.length(); j-- > 0;) prepend_reduced(reduced, a.letters()[j], link_);
    return reduced.size();
  }
  std::vector<Generator> reduced = a.letters();
  for (Generator s : b.letters()) append_reduced(reduced, s, link_);
  return reduced.size();
}

GroupElement CoxeterGroup::inverse(const GroupElement& a) const {
  std::vector<Generator> reversed(a.letters().rbegin(), a.letters().rend());
  return GroupElement::from_normal_form(lex_normalize(reversed));
}

std::size_t CoxeterGroup::distance(const GroupElement& a, const GroupElement& b) const {
  return product_length(inverse(a), b);
}

Reflection CoxeterGroup::reflection_of_edge(const GroupElement& g, Generator s) const {
  check(s);
  std::vector<Generator> letters = g.letters();
  times_in_place(letters, s);
  for (std::size_t j = g.length(); j-- > 0;) times_in_place(letters, g.letters()[j]);
  return {GroupElement::from_normal_form(std::move(letters)), s};
}

GroupElement CoxeterGroup::carrier_vertex(const Reflection& r) const {
  GroupElement q = r.element;
  GroupElement x;
  while (q.length() > 1) {
    const Generator u = q.letters().front();
    const std::size_t before = q.length();
    q = times(times(u, q), u);
    if (q.length() + 2 != before) {
      throw InvalidArgument("not a reflection: " + format(r.element));
    }
    x = times(x, u);
  }
  if (q.length() != 1 || q.letters().front() != r.label) {
    throw InvalidArgument("reflection label does not match element " + format(r.element));
  }
  return x;
}

bool CoxeterGroup::far_side(const Reflection& r, const GroupElement& x) const {
  return product_length(r.element, x) < x.length();
}

bool CoxeterGroup::separates(const Reflection& r, const GroupElement& u,
                             const GroupElement& v) const {
  return far_side(r, u) != far_side(r, v);
}

GeneratorMask CoxeterGroup::left_descents(const GroupElement& a) const {
  GeneratorMask seen = 0, out = 0;
  for (Generator s : a.letters()) {
    if ((seen & ~link_[s]) == 0 && !((seen >> s) & 1U)) out |= bit(s);
    seen |= bit(s);
  }
  return out;
}

GeneratorMask CoxeterGroup::right_descents(const GroupElement& a) const {
  GeneratorMask seen = 0, out = 0;
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    const Generator s = *it;
    if ((seen & ~link_[s]) == 0 && !((seen >> s) & 1U)) out |= bit(s);
    seen |= bit(s);
  }
  return out;
}

std::vector<GroupElement> CoxeterGroup::interval(const GroupElement& a, const GroupElement& b,
                                                 std::size_t bound) const {
  const GroupElement w = multiply(inverse(a), b);
  if (w.length() > bound) {
    throw InvalidArgument("interval: distance " + std::to_string(w.length()) +
                          " exceeds bound " + std::to_string(bound));
  }
  // Prefixes p of w in the weak order, paired with the remainder p^-1 w.
  std::vector<std::pair<GroupElement, GroupElement>> layer{{identity(), w}};
  std::vector<GroupElement> out{a};
  for (std::size_t k = 0; k < w.length(); ++k) {
    std::unordered_set<GroupElement> seen;
    std::vector<std::pair<GroupElement, GroupElement>> next;
    for (const auto& [p, rest] : layer) {
      for (GeneratorMask m = left_descents(rest); m != 0; m &= m - 1) {
        const auto t = static_cast<Generator>(std::countr_zero(m));
        GroupElement q = times(p, t);
        if (!seen.insert(q).second) continue;
        next.emplace_back(std::move(q), times(t, rest));
      }
    }
    for (const auto& entry : next) out.push_back(multiply(a, entry.first));
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> CoxeterGroup::hull(const std::vector<GroupElement>& seed,
                                             std::size_t radius_bound) const {
  std::vector<GroupElement> members;
  std::unordered_set<GroupElement> in;
  for (const auto& x : seed) {
    if (in.insert(x).second) members.push_back(x);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (distance(members[i], members[j]) > radius_bound) {
        throw InvalidArgument("hull: seed pair farther apart than the radius bound");
      }
    }
  }
  const std::size_t seed_count = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const GroupElement x = members[i], y = members[j];
      for (auto& z : interval(x, y, 2 * radius_bound)) {
        if (in.contains(z)) continue;
        bool near = false;
        for (std::size_t k = 0; k < seed_count && !near; ++k) {
          near = distance(members[k], z) <= radius_bound;
        }
        if (!near) throw HullEscape("hull escaped the ball around the seed at " + format(z));
        in.insert(z);
        members.push_back(std::move(z));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<GroupElement>> CoxeterGroup::ball(std::size_t radius) const {
  std::vector<std::vector<GroupElement>> layers{{identity()}};
  for (std::size_t k = 0; k < radius; ++k) {
    std::unordered_set<GroupElement> seen;
    std::vector<GroupElement> next;
    for (const auto& x : layers.back()) {
      const GeneratorMask descents = right_descents(x);
      for (Generator s = 0; s < rank(); ++s) {
        if ((descents >> s) & 1U) continue;
        GroupElement y = times(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

std::string CoxeterGroup::format(const GroupElement& a) const {
  if (a.is_identity()) return "e";
  std::string out;
  for (Generator s : a.letters()) {
    if (!out.empty()) out += ' ';
    out += labels_[s];
  }
  return out;
}

}  // namespace coxsep
