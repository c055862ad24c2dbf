#include "transversal/code_io.hpp"

#include <sstream>

namespace transversal {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw CodeIoError(CodeIoError::Kind::Syntax, line, {msg});
}

}  // namespace

CodeIoError::CodeIoError(Kind kind_, int line_, std::vector<std::string> details_)
    : std::runtime_error(
          (kind_ == Kind::Syntax
               ? (line_ > 0 ? "line " + std::to_string(line_) + ": " : std::string())
               : std::string("validation: ")) +
          join(details_)),
      kind(kind_),
      line(line_),
      details(std::move(details_)) {}

StabilizerCode parse_code(std::string_view text) {
  StabilizerCode code;
  bool header_seen = false;
  enum class Section { None, Stabilizers, LogicalX, LogicalZ };
  Section section = Section::None;
  bool seen[3] = {false, false, false};

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line{raw};
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (!header_seen) {
      std::istringstream header{std::string(line)};
      std::string tok_n, tok_k, extra;
      header >> tok_n >> tok_k;
      if (header >> extra) fail(lineno, "unexpected token '" + extra + "' after n/k header");
      long n = -1, k = -1;
      auto parse_kv = [&](const std::string& tok, const char* key, long& out) {
        std::string prefix = std::string(key) + "=";
        if (tok.rfind(prefix, 0) != 0) fail(lineno, "expected '" + prefix + "<int>', got '" + tok + "'");
        try {
          std::size_t pos = 0;
          out = std::stol(tok.substr(prefix.size()), &pos);
          if (pos != tok.size() - prefix.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          fail(lineno, "bad integer in '" + tok + "'");
        }
      };
      parse_kv(tok_n, "n", n);
      parse_kv(tok_k, "k", k);
      if (n <= 0) fail(lineno, "n must be positive");
      if (k < 0 || k > n) fail(lineno, "k must satisfy 0 <= k <= n");
      code.n = static_cast<std::size_t>(n);
      code.k = static_cast<std::size_t>(k);
      header_seen = true;
      continue;
    }

    if (line.front() == '[') {
      if (line == "[stabilizers]") {
        section = Section::Stabilizers;
      } else if (line == "[logical_x]") {
        section = Section::LogicalX;
      } else if (line == "[logical_z]") {
        section = Section::LogicalZ;
      } else {
        fail(lineno, "unknown section header '" + std::string(line) + "'");
      }
      int idx = static_cast<int>(section) - 1;
      if (seen[idx]) fail(lineno, "duplicate section " + std::string(line));
      seen[idx] = true;
      continue;
    }

    if (section == Section::None) fail(lineno, "operator line before any section header");

    std::string_view body = line;
    if (body.front() == '+' || body.front() == '-') body.remove_prefix(1);
    if (body.size() != code.n)
      fail(lineno, "operator has " + std::to_string(body.size()) + " letters, expected " +
                       std::to_string(code.n));
    for (char c : body)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        fail(lineno, std::string("unexpected character '") + c + "' in operator");

    PauliString p = PauliString::from_letters(line);
    switch (section) {
      case Section::Stabilizers:
        code.generators.push_back(std::move(p));
        break;
      case Section::LogicalX:
        code.logical_x.push_back(std::move(p));
        break;
      case Section::LogicalZ:
        code.logical_z.push_back(std::move(p));
        break;
      case Section::None:
        break;
    }
  }

  if (!header_seen) fail(0, "missing 'n=<int> k=<int>' header");
  for (int i = 0; i < 3; ++i)
    if (!seen[i])
      fail(0, std::string("missing section ") +
                  (i == 0 ? "[stabilizers]" : i == 1 ? "[logical_x]" : "[logical_z]"));
  auto count_check = [&](const char* what, std::size_t got, std::size_t want) {
    if (got != want)
      fail(0, std::string(what) + ": expected " + std::to_string(want) + " lines, got " +
                  std::to_string(got));
  };
  count_check("[stabilizers]", code.generators.size(), code.n - code.k);
  count_check("[logical_x]", code.logical_x.size(), code.k);
  count_check("[logical_z]", code.logical_z.size(), code.k);

  std::vector<Violation> violations = validate(code);
  if (!violations.empty()) {
    std::vector<std::string> msgs;
    for (const Violation& v : violations) msgs.push_back(v.message);
    throw CodeIoError(CodeIoError::Kind::Validation, 0, std::move(msgs));
  }
  return code;
}

std::string serialize_code(const StabilizerCode& code) {
  std::string out;
  if (!code.name.empty()) out += "# " + code.name + "\n";
  out += "n=" + std::to_string(code.n) + " k=" + std::to_string(code.k) + "\n";
  auto emit = [&out](const char* header, const std::vector<PauliString>& ps) {
    out += header;
    out += "\n";
    for (const PauliString& p : ps) {
      int e = ((p.phase_exp % 4) + 4) % 4;
      if (e % 2 != 0)
        throw std::invalid_argument("serialize_code: operator with imaginary sign " + p.str());
      out += (e == 2 ? "-" : "") + p.letters() + "\n";
    }
  };
  emit("[stabilizers]", code.generators);
  emit("[logical_x]", code.logical_x);
  emit("[logical_z]", code.logical_z);
  return out;
}

bool structurally_equal(const StabilizerCode& a, const StabilizerCode& b) {
  auto norm = [](const PauliString& p) {
    PauliString q = p;
    q.phase_exp = ((q.phase_exp % 4) + 4) % 4;
    return q;
  };
  auto eq_list = [&](const std::vector<PauliString>& u, const std::vector<PauliString>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!(norm(u[i]) == norm(v[i]))) return false;
    return true;
  };
  return a.n == b.n && a.k == b.k && eq_list(a.generators, b.generators) &&
         eq_list(a.logical_x, b.logical_x) && eq_list(a.logical_z, b.logical_z);
}

}  // namespace transversal
