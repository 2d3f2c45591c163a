#include "bolforge/properties.hpp"

#include <algorithm>
#include <deque>

namespace bolforge {

namespace {

using Index = std::size_t;

Witness tuple(std::string relation, std::initializer_list<Index> xs) {
  Witness w{std::move(relation), {}};
  for (Index x : xs) w.elements.emplace_back(x);
  return w;
}

template <class Pred>
Verdict check_triples(const LoopTable& loop, Pred holds) {
  Verdict v;
  const Index n = loop.order();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (!holds(x, y, z) && v.fail(tuple("", {x, y, z}))) return v;
  return v;
}

}  // namespace

Verdict is_left_bol(const LoopTable& L) {
  return check_triples(L, [&](Index x, Index y, Index z) {
    return L.cell(x, L.cell(y, L.cell(x, z))) == L.cell(L.cell(x, L.cell(y, x)), z);
  });
}

Verdict is_right_bol(const LoopTable& L) {
  return check_triples(L, [&](Index x, Index y, Index z) {
    return L.cell(L.cell(L.cell(z, x), y), x) == L.cell(z, L.cell(L.cell(x, y), x));
  });
}

Verdict is_moufang(const LoopTable& L) {
  Verdict left = is_left_bol(L);
  Verdict right = is_right_bol(L);
  Verdict v;
  for (auto& w : left.witnesses) {
    w.relation = "left-bol";
    v.fail(std::move(w));
  }
  for (auto& w : right.witnesses) {
    w.relation = "right-bol";
    if (v.witnesses.size() >= Verdict::kMaxWitnesses) break;
    v.fail(std::move(w));
  }
  return v;
}

Verdict is_associative(const LoopTable& L) {
  return check_triples(L, [&](Index x, Index y, Index z) {
    return L.cell(x, L.cell(y, z)) == L.cell(L.cell(x, y), z);
  });
}

Verdict is_commutative(const LoopTable& L) {
  Verdict v;
  for (Index x = 0; x < L.order(); ++x)
    for (Index y = x + 1; y < L.order(); ++y)
      if (L.cell(x, y) != L.cell(y, x) && v.fail(tuple("", {x, y}))) return v;
  return v;
}

Verdict has_two_sided_inverses(const LoopTable& L) {
  Verdict v;
  for (Index x = 0; x < L.order(); ++x)
    if (!L.has_two_sided_inverse(Element(x)) && v.fail(tuple("", {x}))) return v;
  return v;
}

Verdict has_lip(const LoopTable& L) {
  Verdict v;
  const Index n = L.order();
  for (Index x = 0; x < n; ++x) {
    if (!L.has_two_sided_inverse(Element(x))) {
      if (v.fail(tuple("no-two-sided-inverse", {x}))) return v;
      continue;
    }
    const Index inv = L.inverse(Element(x)).index();
    for (Index y = 0; y < n; ++y) {
      if (L.cell(inv, L.cell(x, y)) != y) {
        if (v.fail(tuple("x^-1*xy=y", {x, y}))) return v;
      } else if (L.cell(x, L.cell(inv, y)) != y) {
        if (v.fail(tuple("x*x^-1y=y", {x, y}))) return v;
      }
    }
  }
  return v;
}

Verdict has_lap(const LoopTable& L) {
  Verdict v;
  const Index n = L.order();
  for (Index x = 0; x < n; ++x) {
    const Index sq = L.cell(x, x);
    for (Index y = 0; y < n; ++y)
      if (L.cell(x, L.cell(x, y)) != L.cell(sq, y) && v.fail(tuple("", {x, y}))) return v;
  }
  return v;
}

Verdict is_power_associative(const LoopTable& L) {
  Verdict v;
  for (Index x = 0; x < L.order(); ++x) {
    ElementSubset gen = generated_subloop(ElementSubset(L, {Element(x)}));
    bool found = false;
    for (Element a : gen.members()) {
      for (Element b : gen.members()) {
        for (Element c : gen.members()) {
          const Index i = a.index(), j = b.index(), k = c.index();
          if (L.cell(i, L.cell(j, k)) != L.cell(L.cell(i, j), k)) {
            if (v.fail(tuple("", {x, i, j, k}))) return v;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  return v;
}

ElementSubset commutant(const LoopTable& L) {
  std::vector<Element> out;
  const Index n = L.order();
  for (Index a = 0; a < n; ++a) {
    bool commutes = true;
    for (Index x = 0; x < n && commutes; ++x) commutes = L.cell(a, x) == L.cell(x, a);
    if (commutes) out.emplace_back(a);
  }
  return ElementSubset(L, std::move(out));
}

ElementSubset center(const LoopTable& L) {
  std::vector<Element> out;
  const Index n = L.order();
  const ElementSubset comm = commutant(L);
  for (Element el : comm.members()) {
    const Index a = el.index();
    bool central = true;
    for (Index x = 0; x < n && central; ++x) {
      for (Index y = 0; y < n && central; ++y) {
        central = L.cell(a, L.cell(x, y)) == L.cell(L.cell(a, x), y) &&
                  L.cell(x, L.cell(a, y)) == L.cell(L.cell(x, a), y) &&
                  L.cell(L.cell(x, y), a) == L.cell(x, L.cell(y, a));
      }
    }
    if (central) out.push_back(el);
  }
  return ElementSubset(L, std::move(out));
}

ElementSubset bol_elements(const LoopTable& L) {
  std::vector<Element> out;
  const Index n = L.order();
  for (Index a = 0; a < n; ++a) {
    bool bol = true;
    for (Index x = 0; x < n && bol; ++x) {
      const Index lhs_row = L.cell(a, L.cell(x, a));
      for (Index y = 0; y < n && bol; ++y)
        bol = L.cell(a, L.cell(x, L.cell(a, y))) == L.cell(lhs_row, y);
    }
    if (bol) out.emplace_back(a);
  }
  return ElementSubset(L, std::move(out));
}

ElementSubset generated_subloop(const ElementSubset& subset) {
  const LoopTable& L = subset.parent();
  std::vector<bool> in(L.order());
  std::vector<Index> members;
  std::deque<Index> work;
  auto add = [&](Index x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      work.push_back(x);
    }
  };
  add(L.identity().index());
  for (Element x : subset.members()) add(x.index());
  while (!work.empty()) {
    const Index u = work.front();
    work.pop_front();
    // Snapshot: elements added during this pass are queued themselves.
    const std::size_t count = members.size();
    for (std::size_t k = 0; k < count; ++k) {
      const Index w = members[k];
      add(L.cell(u, w));
      add(L.cell(w, u));
      add(L.left_div_cell(u, w));
      add(L.left_div_cell(w, u));
      add(L.right_div_cell(u, w));
      add(L.right_div_cell(w, u));
    }
  }
  std::vector<Element> out(members.begin(), members.end());
  return ElementSubset(L, std::move(out));
}

Verdict is_subloop(const ElementSubset& subset) {
  const LoopTable& L = subset.parent();
  Verdict v;
  if (!subset.contains(L.identity())) {
    if (v.fail(tuple("identity", {L.identity().index()}))) return v;
  }
  for (Element ea : subset.members()) {
    for (Element eb : subset.members()) {
      const Index a = ea.index(), b = eb.index();
      if (!subset.contains(Element(L.cell(a, b))) && v.fail(tuple("mul", {a, b}))) return v;
      if (!subset.contains(Element(L.left_div_cell(a, b))) && v.fail(tuple("ldiv", {a, b})))
        return v;
      if (!subset.contains(Element(L.right_div_cell(a, b))) && v.fail(tuple("rdiv", {a, b})))
        return v;
    }
  }
  return v;
}

Verdict is_normal(const ElementSubset& subset) {
  if (!is_subloop(subset)) throw NotASubloop("normality is only defined for subloops");
  const LoopTable& L = subset.parent();
  const Index n = L.order();
  auto image = [&](auto f) {
    std::vector<bool> out(n);
    for (Element s : subset.members()) out[f(s.index())] = true;
    return out;
  };
  Verdict v;
  for (Index x = 0; x < n; ++x) {
    if (image([&](Index s) { return L.cell(x, s); }) !=
            image([&](Index s) { return L.cell(s, x); }) &&
        v.fail(tuple("xS=Sx", {x})))
      return v;
    for (Index y = 0; y < n; ++y) {
      const Index xy = L.cell(x, y);
      if (image([&](Index s) { return L.cell(x, L.cell(y, s)); }) !=
              image([&](Index s) { return L.cell(xy, s); }) &&
          v.fail(tuple("x(yS)=(xy)S", {x, y})))
        return v;
      if (image([&](Index s) { return L.cell(L.cell(s, x), y); }) !=
              image([&](Index s) { return L.cell(s, xy); }) &&
          v.fail(tuple("(Sx)y=S(xy)", {x, y})))
        return v;
    }
  }
  return v;
}

Verdict is_uniquely_2_divisible(const LoopTable& L) {
  Verdict v;
  const Index n = L.order();
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (L.cell(a, a) == L.cell(b, b) && v.fail(tuple("", {a, b}))) return v;
  return v;
}

SquareRoot square_root(const LoopTable& L, Element a) {
  if (a.index() >= L.order()) throw IndexOutOfRange(a.index(), L.order());
  SquareRoot r;
  for (Index c = 0; c < L.order(); ++c)
    if (L.cell(c, c) == a.index()) r.roots.emplace_back(c);
  if (r.roots.size() == 1)
    r.kind = SquareRoot::Kind::Unique;
  else if (r.roots.empty())
    r.kind = SquareRoot::Kind::None;
  else
    r.kind = SquareRoot::Kind::NotUnique;
  return r;
}

Verdict is_twisted_closed(const ElementSubset& subset, Bracketing bracketing) {
  const LoopTable& L = subset.parent();
  Verdict v;
  if (!subset.contains(L.identity())) {
    if (v.fail(tuple("identity", {L.identity().index()}))) return v;
  }
  for (Element x : subset.members()) {
    if (!L.has_two_sided_inverse(x)) {
      if (v.fail(tuple("no-two-sided-inverse", {x.index()}))) return v;
    } else if (!subset.contains(L.inverse(x))) {
      if (v.fail(tuple("inverse", {x.index()}))) return v;
    }
  }
  const bool right = bracketing == Bracketing::RightNested;
  for (Element ex : subset.members()) {
    for (Element ey : subset.members()) {
      const Index x = ex.index(), y = ey.index();
      const Index p = right ? L.cell(x, L.cell(y, x)) : L.cell(L.cell(x, y), x);
      if (!subset.contains(Element(p)) &&
          v.fail(tuple(right ? "x*(y*x)" : "(x*y)*x", {x, y})))
        return v;
    }
  }
  return v;
}

}  // namespace bolforge
