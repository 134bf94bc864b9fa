// Command-line front end: verification suite, spectrum tables, operator dumps.
#include <algorithm>
#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "z22osc/checks.hpp"
#include "z22osc/fock.hpp"
#include "z22osc/json_io.hpp"
#include "z22osc/model.hpp"

namespace {

using namespace z22osc;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string ket(const BasisState& s) {
  std::ostringstream oss;
  oss << "|" << s.n_b << "," << s.n_e << "," << s.n_f1 << "," << s.n_f2 << ">";
  return oss.str();
}

std::string num(double v) {
  std::ostringstream oss;
  oss.precision(17);
  oss << v;
  return oss.str();
}

const char* exactness_label(const CheckReport& r) {
  return r.exactness == CheckReport::Exactness::SymbolicExact ? "symbolic-exact" : "numeric";
}

int cmd_verify(int cutoff, int max_level, unsigned long long seed, const std::string& format) {
  std::vector<CheckReport> reports = run_all(cutoff, max_level, seed);
  bool ok = all_passed(reports);

  if (format == "json") {
    ordered_json doc;
    doc["cutoff"] = cutoff;
    doc["max_level"] = max_level;
    doc["seed"] = seed;
    doc["all_passed"] = ok;
    ordered_json checks = ordered_json::array();
    for (const CheckReport& r : reports) checks.push_back(report_to_json(r));
    doc["checks"] = std::move(checks);
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "check,status,exactness,residual,tolerance,anchor\n";
    for (const CheckReport& r : reports) {
      std::cout << r.name << "," << (r.passed ? "pass" : "fail") << "," << exactness_label(r)
                << "," << num(r.residual) << "," << num(r.tolerance) << ","
                << csv_quote(r.anchor) << "\n";
    }
  } else {
    for (const CheckReport& r : reports) {
      std::printf("[%s] %-24s %-14s residual %-11.3e %6.1f ms\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), exactness_label(r), r.residual, r.elapsed_ms);
      std::printf("       %s\n", r.anchor.c_str());
      for (const std::string& note : r.notes) {
        if (note.rfind("FAIL:", 0) == 0) std::printf("       %s\n", note.c_str());
      }
    }
    std::size_t passed =
        static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(),
                                               [](const CheckReport& r) { return r.passed; }));
    std::printf("%zu/%zu checks passed\n", passed, reports.size());
  }

  std::cerr << "verify: cutoff=" << cutoff << " max_level=" << max_level << " seed=" << seed
            << " -> " << (ok ? "all checks passed" : "CHECK FAILURE") << "\n";
  return ok ? 0 : 1;
}

int cmd_spectrum(int max_level, const std::string& format) {
  FockBasis basis(std::max(2, max_level + 1));

  if (format == "json") {
    std::cout << spectrum_to_json(basis, max_level).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "level,sector,n_b,n_e,n_f1,n_f2\n";
    auto levels = spectrum(basis);
    for (int n = 0; n <= max_level; ++n) {
      auto sectors = split_by_sector(levels[n]);
      for (std::size_t si = 0; si < sectors.size(); ++si) {
        for (const BasisState& s : sectors[si]) {
          std::cout << n << "," << to_string(degree_order[si]) << "," << s.n_b << "," << s.n_e
                    << "," << s.n_f1 << "," << s.n_f2 << "\n";
        }
      }
    }
  } else {
    auto levels = spectrum(basis);
    for (int n = 0; n <= max_level; ++n) {
      std::cout << "level " << n << "   degeneracy " << levels[n].size() << "\n";
      auto sectors = split_by_sector(levels[n]);
      for (std::size_t si = 0; si < sectors.size(); ++si) {
        if (sectors[si].empty()) continue;
        std::cout << "  sector " << to_string(degree_order[si]) << ":";
        for (const BasisState& s : sectors[si]) std::cout << " " << ket(s);
        std::cout << "\n";
      }
    }
  }

  std::cerr << "spectrum: levels 0.." << max_level << "\n";
  return 0;
}

int cmd_op(const std::string& name, int cutoff, double phase, const std::string& format) {
  std::optional<Polynomial> poly = named_operator(name);
  if (!poly) {
    std::cerr << "unknown operator '" << name << "'; known:";
    for (const std::string& n : operator_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }

  std::optional<SparseOperator> matrix;
  if (cutoff > 0) {
    FockBasis basis(cutoff);
    matrix = matrix_of(*poly, basis, phase);
  }

  if (format == "json") {
    ordered_json doc;
    doc["name"] = name;
    doc["terms"] = polynomial_to_json(*poly);
    if (matrix) {
      doc["cutoff"] = cutoff;
      doc["phase"] = phase;
      doc["matrix"] = sparse_to_json(*matrix);
    }
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "word,re,im,upow\n";
    for (const auto& [word, coeff] : poly->terms()) {
      std::string tokens;
      for (Gen g : word) {
        if (!tokens.empty()) tokens += ' ';
        tokens += token(g);
      }
      for (const auto& [upow, c] : coeff.terms()) {
        std::cout << csv_quote(tokens) << "," << rational_to_string(c.re) << ","
                  << rational_to_string(c.im) << "," << upow << "\n";
      }
    }
    if (matrix) {
      ordered_json j = sparse_to_json(*matrix);  // reuse its (row, col) sort
      std::cout << "\nrow,col,re,im\n";
      for (const auto& row : j["entries"]) {
        std::cout << row[0].get<int>() << "," << row[1].get<int>() << ","
                  << num(row[2].get<double>()) << "," << num(row[3].get<double>()) << "\n";
      }
    }
  } else {
    std::cout << name << " = " << poly->to_string() << "\n";
    if (matrix) {
      ordered_json j = sparse_to_json(*matrix);
      std::cout << "matrix at cutoff " << cutoff << " (dim " << j["dim"].get<int>() << ", "
                << j["entries"].size() << " nonzero entries";
      if (phase != 0.0) std::cout << ", u = exp(" << phase << " i)";
      std::cout << "):\n";
      for (const auto& row : j["entries"]) {
        std::printf("  (%3d,%3d) -> %+.12g %+.12g i\n", row[0].get<int>(), row[1].get<int>(),
                    row[2].get<double>(), row[3].get<double>());
      }
    }
  }

  std::cerr << "op: " << name << (matrix ? " with matrix dump" : "") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2xZ2-graded oscillator: normal-ordered operator algebra and Fock matrices"};
  app.require_subcommand(1);

  int cutoff = 6;
  int max_level = 5;
  unsigned long long seed = 0;
  std::string format = "human";
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--cutoff", cutoff, "Fock truncation (occupations 0..cutoff-1)")
      ->capture_default_str();
  verify->add_option("--max-level", max_level, "highest energy level checked for degeneracy")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for the randomized matrix oracle")
      ->capture_default_str();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();

  int spec_level = 4;
  std::string spec_format = "human";
  auto* spec = app.add_subcommand("spectrum", "energy levels with per-sector state lists");
  spec->add_option("--max-level", spec_level, "highest level to print")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  spec->add_option("--format", spec_format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();

  std::string op_name;
  int op_cutoff = 0;
  double op_phase = 0.0;
  std::string op_format = "human";
  auto* op = app.add_subcommand("op", "dump a named operator in normal form");
  op->add_option("name", op_name, "operator name: H00 Q01 Q10 K1 K2 a1 a2 H Q1 Q2 Z11")
      ->required();
  op->add_option("--cutoff", op_cutoff, "also dump the sparse matrix at this truncation");
  op->add_option("--phase", op_phase, "specialize u = exp(i phase) in the matrix dump")
      ->capture_default_str();
  op->add_option("--format", op_format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(cutoff, max_level, seed, format);
    if (app.got_subcommand(spec)) return cmd_spectrum(spec_level, spec_format);
    return cmd_op(op_name, op_cutoff, op_phase, op_format);
  } catch (const CutoffTooSmall& e) {
    std::cerr << "CutoffTooSmall: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
