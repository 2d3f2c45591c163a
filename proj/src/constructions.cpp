#include "bolforge/constructions.hpp"

#include "bolforge/properties.hpp"

namespace bolforge {

LoopTable cyclic_group(std::size_t n) {
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cells[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
  return LoopTable::from_cells(n, std::move(cells));
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxOrder) throw MalformedInput("product order exceeds maximum", 0);
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      cells[x * n + y] = static_cast<std::uint8_t>(a.cell(x / nb, y / nb) * nb +
                                                   b.cell(x % nb, y % nb));
  return LoopTable::from_cells(n, std::move(cells));
}

LoopTable semidirect_product(std::size_t p, std::size_t q, std::size_t r) {
  std::vector<std::size_t> rpow(q);
  rpow[0] = 1 % p;
  for (std::size_t k = 1; k < q; ++k) rpow[k] = rpow[k - 1] * r % p;
  if (rpow[q - 1] * r % p != 1 % p) throw NotAGroup("r^q must be 1 mod p");
  const std::size_t n = p * q;
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % p, b = x / p, c = y % p, d = y / p;
      cells[x * n + y] = static_cast<std::uint8_t>(((b + d) % q) * p + (a + rpow[b] * c) % p);
    }
  }
  return LoopTable::from_cells(n, std::move(cells));
}

LoopTable symmetric_group_3() { return semidirect_product(3, 2, 2); }

LoopTable klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

LoopTable construct_bruck_from_group(const LoopTable& G) {
  if (!is_associative(G)) throw NotAGroup("Bruck construction needs an associative loop");
  const std::size_t n = G.order();
  if (n % 2 == 0) throw EvenOrder("Bruck construction needs a group of odd order");

  // In a group of odd order, a^((k+1)/2) is the unique square root of a.
  std::vector<std::size_t> root(n);
  for (Element a : G.elements()) {
    const std::size_t k = G.element_order(a);
    root[a.index()] = G.power(a, static_cast<long long>((k + 1) / 2)).index();
  }
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t yy = G.cell(y, y);
      cells[x * n + y] = static_cast<std::uint8_t>(root[G.cell(G.cell(x, yy), x)]);
    }
  }
  LoopTable out = [&] {
    try {
      return LoopTable::from_cells(n, std::move(cells), G.identity().index());
    } catch (const LoopError& e) {
      throw PostConstructionCheckFailed(std::string("result is not a loop: ") + e.what());
    }
  }();
  if (!is_left_bol(out)) throw PostConstructionCheckFailed("result is not left Bol");
  if (!has_two_sided_inverses(out)) throw PostConstructionCheckFailed("result lacks two-sided inverses");
  return out;
}

}  // namespace bolforge
