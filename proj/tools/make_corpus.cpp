// Writes the example corpus: make_corpus <dir> writes the files,
// make_corpus --check <dir> compares them with freshly generated text.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "cmdev/homological.hpp"
#include "cmdev/io.hpp"

namespace {

using namespace cmdev;

RingPtr ring_with(std::vector<std::string> names) {
  return std::make_shared<const Ring>(PrimeField(), std::move(names));
}

std::vector<std::string> xs(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

Ideal parse_ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, r));
  return Ideal(r, g);
}

InputDescription ideal_entry(std::string name, const Ideal& i) {
  InputDescription d;
  d.name = std::move(name);
  d.ring = i.ring;
  d.ideal_form = true;
  d.shifts = {0};
  for (const auto& g : minimal_generators(i).generators) d.relations.push_back({g.monic()});
  return d;
}

Polynomial random_monomial(const RingPtr& r, std::mt19937_64& rng, int degree) {
  Monomial m;
  std::uniform_int_distribution<std::size_t> pick(0, r->nvars() - 1);
  for (int k = 0; k < degree; ++k) {
    const std::size_t v = pick(rng);
    m.set(v, m[v] + 1);
  }
  return Polynomial::monomial(r, m);
}

Polynomial random_form(const RingPtr& r, std::mt19937_64& rng, int degree) {
  Polynomial f = Polynomial::constant(r, 0);
  std::uniform_int_distribution<std::int64_t> coef(1, 100);
  for (int k = 0; k < 4; ++k) f = f + coef(rng) * random_monomial(r, rng, degree);
  return f;
}

Ideal random_monomial_ideal(const RingPtr& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 5), degree(1, 3);
  std::vector<Polynomial> g;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) g.push_back(random_monomial(r, rng, degree(rng)));
  return Ideal(r, g);
}

bool has_h0(const PresentedModule& m) { return !zeroth_local_cohomology(m).is_zero(); }

std::map<std::string, InputDescription> build() {
  std::map<std::string, InputDescription> out;
  auto put = [&](const InputDescription& d) { out.emplace(d.name, d); };

  {
    auto r = ring_with(xs(4));
    put(ideal_entry("example1", parse_ideal(r, {"x1^2", "x1*x2", "x1*x3"})));
    put(ideal_entry("gcm", intersect(parse_ideal(r, {"x1", "x2"}), parse_ideal(r, {"x3", "x4"}))));
  }
  {
    auto r = ring_with(xs(7));
    put(ideal_entry("example2", intersect(parse_ideal(r, {"x1", "x2", "x3"}), parse_ideal(r, {"x4", "x5", "x6"}))));
  }
  {
    auto r = ring_with({"x", "y"});
    put(ideal_entry("fl", parse_ideal(r, {"x^2", "x*y"})));
  }
  {
    auto r = ring_with(xs(6));
    put(ideal_entry("gcm6", intersect(parse_ideal(r, {"x1", "x2", "x3"}), parse_ideal(r, {"x4", "x5", "x6"}))));
  }
  {
    // k[s^4, s^3 t, s t^3, t^4]
    auto r = ring_with({"a", "b", "c", "d"});
    put(ideal_entry("quartic", parse_ideal(r, {"b*c-a*d", "b^3-a^2*c", "c^3-b*d^2", "a*c^2-b^2*d"})));
  }

  // complete intersections: four by hand, six generic
  {
    const std::vector<std::pair<std::size_t, std::vector<std::string>>> hand{
        {3, {"x1^2"}},
        {4, {"x1*x2-x3*x4"}},
        {4, {"x1^2", "x2^3"}},
        {5, {"x1*x2", "x3*x4", "x5^2+x1*x3"}}};
    int k = 1;
    for (const auto& [n, gens] : hand) {
      auto r = ring_with(xs(n));
      char name[16];
      std::snprintf(name, sizeof name, "ci_%02d", k++);
      put(ideal_entry(name, parse_ideal(r, gens)));
    }
    std::mt19937_64 rng(2024);
    while (k <= 10) {
      std::uniform_int_distribution<std::size_t> nv(3, 5);
      const std::size_t n = nv(rng);
      std::uniform_int_distribution<std::size_t> cc(1, n - 1);
      const std::size_t c = cc(rng);
      auto r = ring_with(xs(n));
      std::uniform_int_distribution<int> dg(1, 2);
      std::vector<Polynomial> g;
      for (std::size_t i = 0; i < c; ++i) g.push_back(random_form(r, rng, dg(rng)));
      Ideal ideal(r, g);
      if (dimension(ideal) != static_cast<int>(n - c)) continue;
      char name[16];
      std::snprintf(name, sizeof name, "ci_%02d", k++);
      put(ideal_entry(name, ideal));
    }
  }

  // random monomial quotients of positive dimension
  {
    std::mt19937_64 rng(50);
    int k = 1;
    while (k <= 50) {
      std::uniform_int_distribution<std::size_t> nv(2, 5);
      auto r = ring_with(xs(nv(rng)));
      Ideal ideal = random_monomial_ideal(r, rng);
      if (dimension(ideal) < 1) continue;
      char name[16];
      std::snprintf(name, sizeof name, "rand_%02d", k++);
      put(ideal_entry(name, ideal));
    }
  }

  // modules with nonzero H^0: five cyclic, five of rank two
  {
    std::mt19937_64 rng(90);
    int k = 1;
    while (k <= 10) {
      std::uniform_int_distribution<std::size_t> nv(2, 4);
      auto r = ring_with(xs(nv(rng)));
      char name[16];
      std::snprintf(name, sizeof name, "h0_%02d", k);
      if (k <= 5) {
        Ideal ideal = random_monomial_ideal(r, rng);
        const PresentedModule m = PresentedModule::quotient_ring(ideal);
        if (m.dim() < 1 || !has_h0(m)) continue;
        put(ideal_entry(name, ideal));
      } else {
        FreeModule f(r, {0, 0});
        std::vector<ModuleElement> rels;
        for (std::size_t c = 0; c < 2; ++c)
          for (const auto& g : random_monomial_ideal(r, rng).generators) {
            std::vector<Polynomial> row(2, Polynomial::constant(r, 0));
            row[c] = g;
            rels.push_back(ModuleElement::from_entries(f, row));
          }
        std::uniform_int_distribution<int> dg(1, 2);
        const int e = dg(rng);
        rels.push_back(ModuleElement::from_entries(f, {random_monomial(r, rng, e), -random_monomial(r, rng, e)}));
        const PresentedModule m(f, rels);
        if (m.dim() < 1 || !has_h0(m)) continue;
        InputDescription d = describe(PresentedModule(f, minimal_generators(Submodule(f, rels)).generators), name);
        d.ideal_form = false;
        put(d);
      }
      ++k;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const bool check = argc == 3 && std::string(argv[1]) == "--check";
  if (argc != 2 && !check) {
    std::cerr << "usage: make_corpus <dir> | make_corpus --check <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[argc - 1];
  int mismatches = 0;
  for (const auto& [name, d] : build()) {
    const std::string text = print_input(d);
    if (parse_input(text) != d) {
      std::cerr << name << ": print/parse round trip failed\n";
      return 1;
    }
    const auto path = dir / (name + ".json");
    if (check) {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      if (!in || ss.str() != text) {
        std::cerr << path << " differs from the generated text\n";
        ++mismatches;
      }
    } else {
      std::filesystem::create_directories(dir);
      std::ofstream(path) << text;
    }
  }
  return mismatches ? 1 : 0;
}
