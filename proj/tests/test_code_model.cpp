#include <doctest.h>

#include "transversal/catalog.hpp"
#include "transversal/code_io.hpp"

using namespace transversal;

TEST_CASE("pauli string algebra") {
  PauliString x = PauliString::from_letters("X");
  PauliString y = PauliString::from_letters("Y");
  PauliString z = PauliString::from_letters("Z");
  CHECK((x * y).str() == "+iZ");
  CHECK((y * x).str() == "-iZ");
  CHECK((y * z).str() == "+iX");
  CHECK((z * x).str() == "+iY");
  CHECK((x * x).str() == "+I");
  CHECK(x.anticommutes_with(z));
  CHECK(x.anticommutes_with(y));
  CHECK_FALSE(x.anticommutes_with(x));

  PauliString p = PauliString::from_letters("-XYZI");
  CHECK(p.str() == "-XYZI");
  CHECK(p.weight() == 3);
  CHECK(p.x_weight() == 2);
  CHECK(PauliString::from_letters("XXIZ").commutes_with(PauliString::from_letters("ZZII")));
}

TEST_CASE("pauli action on basis states") {
  // Y|0> = i|1>, Y|1> = -i|0>
  PauliString y = PauliString::from_letters("Y");
  CHECK(y.image_of_basis_state(0) == 1);
  CHECK(y.phase_on_basis_state(0) == 1);
  CHECK(y.image_of_basis_state(1) == 0);
  CHECK(y.phase_on_basis_state(1) == 3);
  // Z|1> = -|1>
  PauliString z = PauliString::from_letters("Z");
  CHECK(z.phase_on_basis_state(1) == 2);
  CHECK(z.image_of_basis_state(1) == 1);
}

TEST_CASE("catalog codes validate") {
  for (const StabilizerCode& code : catalog()) {
    CAPTURE(code.name);
    CHECK(validate(code).empty());
  }
}

TEST_CASE("catalog distances match the advertised parameters") {
  CHECK(distance_bruteforce(steane7()) == 3);
  CHECK(distance_bruteforce(rm15(), 15) == 3);
  CHECK(distance_bruteforce(fivequbit()) == 3);
  CHECK(distance_bruteforce(c422()) == 2);
  CHECK_THROWS_AS(distance_bruteforce(rm15()), std::invalid_argument);  // default cap is 12
}

TEST_CASE("single-qubit trivial code has distance 1") {
  StabilizerCode code;
  code.n = 1;
  code.k = 1;
  code.logical_x.push_back(PauliString::from_letters("X"));
  code.logical_z.push_back(PauliString::from_letters("Z"));
  CHECK(validate(code).empty());
  CHECK(distance_bruteforce(code) == 1);
}

TEST_CASE("validate reports duplicated generators") {
  StabilizerCode code = steane7();
  code.generators[1] = code.generators[0];
  auto violations = validate(code);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const Violation& v : violations)
    if (v.message.find("GF(2)-dependent") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("validate reports broken logical pairing") {
  StabilizerCode code = c422();
  // XIXI commutes with ZZII's partner requirement broken: make Z_L[0] a
  // copy of Z_L[1] so X_L[0] no longer anticommutes with its partner.
  code.logical_z[0] = PauliString::from_letters("ZZII");
  auto violations = validate(code);
  bool pairing = false;
  for (const Violation& v : violations)
    if (v.message.find("paired operators must anticommute") != std::string::npos) pairing = true;
  CHECK(pairing);
}

TEST_CASE("validate reports logicals inside the stabilizer") {
  StabilizerCode code;
  code.n = 2;
  code.k = 1;
  code.generators.push_back(PauliString::from_letters("XX"));
  code.logical_x.push_back(PauliString::from_letters("XX"));
  code.logical_z.push_back(PauliString::from_letters("ZZ"));
  auto violations = validate(code);
  bool inside = false;
  for (const Violation& v : violations)
    if (v.message.find("lies in the stabilizer group") != std::string::npos) inside = true;
  CHECK(inside);
}

TEST_CASE("css_view splits the Steane code") {
  auto view = css_view(steane7());
  REQUIRE(view.has_value());
  CHECK(view->gx_rows.row_count() == 3);
  CHECK(view->gz_rows.row_count() == 3);
  for (std::size_t r = 0; r < 3; ++r) CHECK(view->gx_rows.row(r).popcount() == 4);
  CHECK(view->z_detecting);
  CHECK(view->x_detecting);
}

TEST_CASE("css_view rejects the five-qubit code") {
  CHECK_FALSE(css_view(fivequbit()).has_value());
}

TEST_CASE("css_view with only Z-type generators") {
  StabilizerCode code;
  code.n = 2;
  code.k = 1;
  code.generators.push_back(PauliString::from_letters("ZZ"));
  code.logical_x.push_back(PauliString::from_letters("XX"));
  code.logical_z.push_back(PauliString::from_letters("ZI"));
  REQUIRE(validate(code).empty());
  auto view = css_view(code);
  REQUIRE(view.has_value());
  CHECK(view->gx_rows.row_count() == 0);
  CHECK_FALSE(view->z_detecting);  // empty X side detects nothing
}

TEST_CASE("Reed-Muller family") {
  StabilizerCode rm3 = rm_family(3);
  StabilizerCode st = steane7();
  // Same stabilizer group as the Steane catalog entry (equal row spaces).
  BitMatrix a, b, both;
  for (const PauliString& g : rm3.generators) {
    a.append_row(g.symplectic_row());
    both.append_row(g.symplectic_row());
  }
  for (const PauliString& g : st.generators) {
    b.append_row(g.symplectic_row());
    both.append_row(g.symplectic_row());
  }
  CHECK(gf2_rank(a) == 6);
  CHECK(gf2_rank(b) == 6);
  CHECK(gf2_rank(both) == 6);

  StabilizerCode rm4 = rm_family(4);
  CHECK(rm4.n == 15);
  CHECK(validate(rm4).empty());
  auto view = css_view(rm4);
  REQUIRE(view.has_value());
  CHECK(view->gx_rows.row_count() == 4);
  for (std::size_t r = 0; r < 4; ++r) CHECK(view->gx_rows.row(r).popcount() == 8);

  StabilizerCode rm5 = rm_family(5);
  CHECK(rm5.n == 31);
  CHECK(validate(rm5).empty());

  CHECK_THROWS_AS(rm_family(2), std::invalid_argument);
}

TEST_CASE("code file round trip") {
  for (const StabilizerCode& code : catalog()) {
    CAPTURE(code.name);
    StabilizerCode back = parse_code(serialize_code(code));
    CHECK(structurally_equal(back, code));
  }
}

TEST_CASE("parser accepts signs and stores them") {
  std::string text =
      "n=2 k=1\n"
      "[stabilizers]\n"
      "-ZZ\n"
      "[logical_x]\n"
      "XX\n"
      "[logical_z]\n"
      "ZI\n";
  StabilizerCode code = parse_code(text);
  CHECK(code.generators[0].phase_exp == 2);
  CHECK(structurally_equal(parse_code(serialize_code(code)), code));
}

TEST_CASE("parser reports the offending line") {
  std::string text =
      "n=7 k=1\n"
      "[stabilizers]\n"
      "XIXIXIX\n"
      "IXXIIXXX\n";  // 8 letters on line 4
  try {
    parse_code(text);
    FAIL("expected CodeIoError");
  } catch (const CodeIoError& e) {
    CHECK(e.kind == CodeIoError::Kind::Syntax);
    CHECK(e.line == 4);
  }
}

TEST_CASE("parser reports commutation violations") {
  std::string text =
      "n=2 k=1\n"
      "[stabilizers]\n"
      "ZX\n"
      "[logical_x]\n"
      "XX\n"
      "[logical_z]\n"
      "ZZ\n";
  try {
    parse_code(text);
    FAIL("expected CodeIoError");
  } catch (const CodeIoError& e) {
    CHECK(e.kind == CodeIoError::Kind::Validation);
    REQUIRE_FALSE(e.details.empty());
    CHECK(e.details.front().find("anticommutes") != std::string::npos);
  }
}

TEST_CASE("parser rejects malformed headers and sections") {
  CHECK_THROWS_AS(parse_code("m=2 k=1\n[stabilizers]\n"), CodeIoError);
  CHECK_THROWS_AS(parse_code("n=2 k=1\n[stabilizerz]\nZZ\n"), CodeIoError);
  CHECK_THROWS_AS(parse_code("n=2 k=1\nZZ\n"), CodeIoError);  // body before any section
  CHECK_THROWS_AS(parse_code("n=2 k=1\n[stabilizers]\nZZ\n[logical_x]\nXX\n"), CodeIoError);
}
