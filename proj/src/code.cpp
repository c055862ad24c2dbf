#include "transversal/code.hpp"

#include <stdexcept>
#include <string>

namespace transversal {

namespace {

std::string pname(const char* kind, std::size_t i) {
  return std::string(kind) + "[" + std::to_string(i) + "]";
}

BitMatrix symplectic_rows(const std::vector<PauliString>& ps) {
  BitMatrix m;
  for (const PauliString& p : ps) m.append_row(p.symplectic_row());
  return m;
}

}  // namespace

std::vector<Violation> validate(const StabilizerCode& code) {
  std::vector<Violation> out;
  auto add = [&out](std::string msg) { out.push_back({std::move(msg)}); };

  if (code.n == 0) add("n must be positive");
  if (code.k > code.n) add("k exceeds n");
  if (code.generators.size() != code.n - code.k)
    add("expected " + std::to_string(code.n - code.k) + " generators, got " +
        std::to_string(code.generators.size()));
  if (code.logical_x.size() != code.k)
    add("expected " + std::to_string(code.k) + " logical X operators, got " +
        std::to_string(code.logical_x.size()));
  if (code.logical_z.size() != code.k)
    add("expected " + std::to_string(code.k) + " logical Z operators, got " +
        std::to_string(code.logical_z.size()));

  auto all = [&code]() {
    std::vector<const PauliString*> v;
    for (const auto& p : code.generators) v.push_back(&p);
    for (const auto& p : code.logical_x) v.push_back(&p);
    for (const auto& p : code.logical_z) v.push_back(&p);
    return v;
  }();
  for (const PauliString* p : all)
    if (p->n != code.n) {
      add("operator length differs from n");
      return out;  // everything below assumes consistent lengths
    }

  for (std::size_t i = 0; i < code.generators.size(); ++i)
    for (std::size_t j = i + 1; j < code.generators.size(); ++j)
      if (code.generators[i].anticommutes_with(code.generators[j]))
        add("generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");

  BitMatrix gen_rows = symplectic_rows(code.generators);
  if (!code.generators.empty() && gf2_rank(gen_rows) != code.generators.size())
    add("generators are GF(2)-dependent (rank " + std::to_string(gf2_rank(gen_rows)) +
        " < " + std::to_string(code.generators.size()) + ")");

  auto check_logical_vs_generators = [&](const char* kind, const std::vector<PauliString>& ls) {
    for (std::size_t j = 0; j < ls.size(); ++j)
      for (std::size_t i = 0; i < code.generators.size(); ++i)
        if (ls[j].anticommutes_with(code.generators[i]))
          add(pname(kind, j) + " anticommutes with generator " + std::to_string(i));
  };
  check_logical_vs_generators("logical_x", code.logical_x);
  check_logical_vs_generators("logical_z", code.logical_z);

  for (std::size_t j = 0; j < code.logical_x.size(); ++j)
    for (std::size_t l = 0; l < code.logical_z.size(); ++l) {
      bool anti = code.logical_x[j].anticommutes_with(code.logical_z[l]);
      if (j == l && !anti)
        add(pname("logical_x", j) + " commutes with " + pname("logical_z", l) +
            " (paired operators must anticommute)");
      if (j != l && anti)
        add(pname("logical_x", j) + " anticommutes with " + pname("logical_z", l));
    }
  for (std::size_t j = 0; j < code.logical_x.size(); ++j)
    for (std::size_t l = j + 1; l < code.logical_x.size(); ++l)
      if (code.logical_x[j].anticommutes_with(code.logical_x[l]))
        add(pname("logical_x", j) + " anticommutes with " + pname("logical_x", l));
  for (std::size_t j = 0; j < code.logical_z.size(); ++j)
    for (std::size_t l = j + 1; l < code.logical_z.size(); ++l)
      if (code.logical_z[j].anticommutes_with(code.logical_z[l]))
        add(pname("logical_z", j) + " anticommutes with " + pname("logical_z", l));

  auto check_not_in_group = [&](const char* kind, const std::vector<PauliString>& ls) {
    for (std::size_t j = 0; j < ls.size(); ++j)
      if (gf2_in_rowspace(gen_rows, ls[j].symplectic_row()))
        add(pname(kind, j) + " lies in the stabilizer group");
  };
  check_not_in_group("logical_x", code.logical_x);
  check_not_in_group("logical_z", code.logical_z);

  return out;
}

std::optional<CSSView> css_view(const StabilizerCode& code) {
  CSSView view;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    const PauliString& g = code.generators[i];
    bool has_x = g.x_bits.any();
    bool has_z = g.z_bits.any();
    if (has_x && has_z) return std::nullopt;
    if (has_x) {
      view.gx_rows.append_row(g.x_bits);
      view.x_generator_indices.push_back(i);
    } else {
      view.gz_rows.append_row(g.z_bits);
      view.z_generator_indices.push_back(i);
    }
  }
  for (const PauliString& l : code.logical_x) view.x_logicals.append_row(l.x_bits);
  for (const PauliString& l : code.logical_z) view.z_logicals.append_row(l.z_bits);
  if (view.gx_rows.row_count() == 0) view.gx_rows = BitMatrix(0, code.n);
  if (view.gz_rows.row_count() == 0) view.gz_rows = BitMatrix(0, code.n);
  view.z_detecting = !view.gx_rows.has_zero_column();
  view.x_detecting = !view.gz_rows.has_zero_column();
  return view;
}

namespace {

// Enumerate supports of a given weight, and per support all 3^w
// non-identity letter assignments.
template <typename F>
bool for_each_pauli_of_weight(std::size_t n, int w, F&& fn) {
  std::vector<std::size_t> support(w);
  for (int i = 0; i < w; ++i) support[i] = i;
  std::vector<int> letters(w, 0);  // 0=X, 1=Y, 2=Z

  auto next_support = [&]() -> bool {
    int i = w - 1;
    while (i >= 0 && support[i] == n - w + i) --i;
    if (i < 0) return false;
    ++support[i];
    for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
    return true;
  };

  if (w == 0) return false;
  while (true) {
    std::fill(letters.begin(), letters.end(), 0);
    while (true) {
      PauliString p(n);
      for (int i = 0; i < w; ++i) {
        if (letters[i] != 2) p.x_bits.set(support[i], true);
        if (letters[i] != 0) p.z_bits.set(support[i], true);
      }
      if (fn(p)) return true;
      int i = w - 1;
      while (i >= 0 && letters[i] == 2) letters[i--] = 0;
      if (i < 0) break;
      ++letters[i];
    }
    if (!next_support()) return false;
  }
}

}  // namespace

int distance_bruteforce(const StabilizerCode& code, int n_cap) {
  if (static_cast<int>(code.n) > n_cap)
    throw std::invalid_argument("distance_bruteforce: n exceeds cap " + std::to_string(n_cap));
  BitMatrix gen_rows;
  for (const PauliString& g : code.generators) gen_rows.append_row(g.symplectic_row());
  if (gen_rows.row_count() == 0) gen_rows = BitMatrix(0, 2 * code.n);

  for (int w = 1; w <= static_cast<int>(code.n); ++w) {
    int found = 0;
    for_each_pauli_of_weight(code.n, w, [&](const PauliString& p) {
      for (const PauliString& g : code.generators)
        if (p.anticommutes_with(g)) return false;
      if (gf2_in_rowspace(gen_rows, p.symplectic_row())) return false;
      found = w;
      return true;
    });
    if (found) return found;
  }
  throw std::runtime_error("distance_bruteforce: no logical operator found (k = 0 code?)");
}

}  // namespace transversal
