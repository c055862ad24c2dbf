#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "transversal/analysis.hpp"
#include "transversal/catalog.hpp"
#include "transversal/code_io.hpp"
#include "transversal/report.hpp"

namespace {

using namespace transversal;

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Resolves the positional file vs --catalog choice shared by most
// subcommands.
struct CodeSource {
  std::string file;
  std::string catalog_name;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "code file");
    cmd->add_option("--catalog", catalog_name, "built-in code (steane7, rm15, fivequbit, c422, rm<n>)");
  }

  StabilizerCode load() const {
    if (file.empty() == catalog_name.empty())
      throw std::runtime_error("exactly one of <file> or --catalog is required");
    if (!catalog_name.empty()) {
      if (auto c = find_catalog(catalog_name)) return *c;
      if (catalog_name.rfind("rm", 0) == 0) {
        int n = std::stoi(catalog_name.substr(2));
        for (int m = 3; m <= 7; ++m)
          if ((1 << m) - 1 == n) return rm_family(m);
      }
      throw std::runtime_error("unknown catalog code: " + catalog_name);
    }
    StabilizerCode code = parse_code(read_file(file));
    code.name = file;
    return code;
  }
};

RationalAngle parse_angle_or_throw(const std::string& s) {
  auto a = RationalAngle::parse(s);
  if (!a) throw std::runtime_error("bad angle literal '" + s + "' (expected p/q or integer p)");
  return *a;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

void emit(const Report& report, bool as_json) {
  if (as_json)
    std::cout << report.json.dump(2) << "\n";
  else
    std::cout << report.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of transversal diagonal gates on qubit stabilizer codes"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  ReportOptions ropts;
  app.add_option("--group-cap", ropts.group_cap, "n-k cap for group enumeration");
  app.add_option("--oracle-cap", ropts.oracle_cap, "n-k cap for the exact oracle");
  app.add_option("--float-cap", ropts.float_cap, "total qubit cap for the float oracle");
  app.add_option("--q-sweep-cap", ropts.q_sweep_cap, "odd-denominator sweep bound");
  bool no_oracle = false;
  app.add_flag("--no-oracle", no_oracle, "skip oracle cross-checks");

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "parse and validate a code file");
  std::string validate_file;
  cmd_validate->add_option("file", validate_file, "code file")->required();

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "classify admissible transversal rotations");
  CodeSource analyze_src;
  analyze_src.attach(cmd_analyze);

  // check
  auto* cmd_check = app.add_subcommand("check", "check one diagonal gate");
  CodeSource check_src;
  check_src.attach(cmd_check);
  std::string theta_str, phi_str, thetas_str;
  cmd_check->add_option("--theta", theta_str, "uniform angle p/q (units of pi)");
  cmd_check->add_option("--phi", phi_str, "phase on |0> (units of pi)");
  cmd_check->add_option("--thetas", thetas_str, "per-qubit angles, comma separated");

  // two-qubit
  auto* cmd_two = app.add_subcommand("two-qubit", "check a two-block diagonal gate");
  CodeSource two_src;
  two_src.attach(cmd_two);
  std::string gate_str;
  cmd_two->add_option("--gate", gate_str, "t00,t01,t10,t11 (units of pi)")->required();

  // decompress
  auto* cmd_decompress = app.add_subcommand("decompress", "split one qubit into m copies");
  CodeSource dec_src;
  dec_src.attach(cmd_decompress);
  std::size_t dec_qubit = 0;
  int dec_m = 0;
  cmd_decompress->add_option("--qubit", dec_qubit, "qubit index to split")->required();
  cmd_decompress->add_option("--m", dec_m, "number of copies (>= 2)")->required();

  // convert
  auto* cmd_convert = app.add_subcommand("convert", "check a codespace-to-codespace mapping");
  std::string convert_source, convert_target, convert_theta;
  cmd_convert->add_option("source", convert_source, "source code file")->required();
  cmd_convert->add_option("target", convert_target, "target code file")->required();
  cmd_convert->add_option("--theta", convert_theta, "uniform angle p/q")->required();

  CLI11_PARSE(app, argc, argv);
  ropts.run_oracle = !no_oracle;

  try {
    if (cmd_validate->parsed()) {
      std::string text;
      try {
        text = read_file(validate_file);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      try {
        StabilizerCode code = parse_code(text);
        std::cout << "valid [[" << code.n << "," << code.k << "]] code\n";
        return kExitAccepted;
      } catch (const CodeIoError& e) {
        for (const std::string& d : e.details) {
          if (e.kind == CodeIoError::Kind::Syntax && e.line > 0)
            std::cout << "line " << e.line << ": " << d << "\n";
          else
            std::cout << d << "\n";
        }
        return e.kind == CodeIoError::Kind::Syntax ? kExitUsage : kExitRejected;
      }
    }

    if (cmd_analyze->parsed()) {
      Report r = analyze_report(analyze_src.load(), ropts);
      emit(r, as_json);
      return r.exit_code;
    }

    if (cmd_check->parsed()) {
      StabilizerCode code = check_src.load();
      AngleVector angles;
      if (!thetas_str.empty()) {
        if (!theta_str.empty() || !phi_str.empty())
          throw std::runtime_error("--thetas excludes --theta/--phi");
        for (const std::string& part : split_csv(thetas_str))
          angles.push_back(parse_angle_or_throw(part));
        if (angles.size() != code.n)
          throw std::runtime_error("--thetas needs exactly n = " + std::to_string(code.n) +
                                   " entries");
      } else if (!theta_str.empty()) {
        RationalAngle theta = parse_angle_or_throw(theta_str);
        RationalAngle phi = phi_str.empty() ? RationalAngle{} : parse_angle_or_throw(phi_str);
        angles = uniform_angles(code.n, theta - phi);
      } else {
        throw std::runtime_error("one of --theta or --thetas is required");
      }
      Report r = check_report(code, angles, ropts);
      emit(r, as_json);
      return r.exit_code;
    }

    if (cmd_two->parsed()) {
      StabilizerCode code = two_src.load();
      std::vector<std::string> parts = split_csv(gate_str);
      if (parts.size() != 4) throw std::runtime_error("--gate needs t00,t01,t10,t11");
      DiagonalGate2Q gate;
      gate.theta00 = parse_angle_or_throw(parts[0]);
      gate.theta01 = parse_angle_or_throw(parts[1]);
      gate.theta10 = parse_angle_or_throw(parts[2]);
      gate.theta11 = parse_angle_or_throw(parts[3]);
      Report r = two_qubit_report(code, gate, ropts);
      emit(r, as_json);
      return r.exit_code;
    }

    if (cmd_decompress->parsed()) {
      StabilizerCode code = dec_src.load();
      auto [out, angles] = decompress(code, dec_qubit, dec_m, AngleVector(code.n));
      std::cout << serialize_code(out);
      return kExitAccepted;
    }

    if (cmd_convert->parsed()) {
      StabilizerCode source = parse_code(read_file(convert_source));
      source.name = convert_source;
      StabilizerCode target = parse_code(read_file(convert_target));
      target.name = convert_target;
      DiagonalGate1Q gate(parse_angle_or_throw(convert_theta));
      Report r = convert_report(source, target, gate, ropts);
      emit(r, as_json);
      return r.exit_code;
    }
  } catch (const EngineDisagreement& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
