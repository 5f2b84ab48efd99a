// gz — command-line front end for the Gelfand–Zeitlin toolkit.
//
// Every subcommand reads JSON files, writes one JSON document to stdout (or
// the --output file), and maps failures onto fixed exit codes:
//   1  malformed input          {"error": "invalid-input", ...}
//   2  domain violation         {"error": "domain", ...}
//   3  numerical diagnostic     {"error": "numerical", ...}

#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gz/coordinates.hpp"
#include "gz/cross_section.hpp"
#include "gz/fiber.hpp"
#include "gz/flows.hpp"
#include "gz/json_io.hpp"
#include "gz/orthopoly.hpp"
#include "gz/poisson.hpp"
#include "gz/regularity.hpp"
#include "gz/selftest.hpp"
#include "gz/sympoly.hpp"

namespace {

using gz::Json;

struct Options {
  std::uint64_t seed = 20260822ull;
  gz::ToleranceConfig tol;
  std::string output;
};

void emit(const Json& doc, const std::string& output) {
  if (output.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    out << doc.dump(2) << "\n";
  }
}

std::pair<int, int> parse_key(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--key expects \"k,m\"");
  }
  try {
    std::size_t used = 0;
    const int k = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    const int m = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {k, m};
  } catch (const std::exception&) {
    throw std::invalid_argument("--key expects \"k,m\" with integer entries");
  }
}

std::pair<int, int> parse_entry_variable(const std::string& name) {
  if (name.size() != 4 || name[0] != 'a' || name[1] != '_' ||
      !std::isdigit(static_cast<unsigned char>(name[2])) ||
      !std::isdigit(static_cast<unsigned char>(name[3]))) {
    throw std::invalid_argument(
        "entry variables are written \"a_ij\" with single-digit indices");
  }
  return {name[2] - '0', name[3] - '0'};
}

std::vector<gz::Complex> subdiag_from_file(const std::string& path) {
  Json doc = gz::load_json_file(path);
  if (!doc.is_array()) {
    throw std::invalid_argument("--subdiag file must hold a JSON array");
  }
  std::vector<gz::Complex> z;
  for (const auto& item : doc) z.push_back(gz::complex_from_json(item));
  return z;
}

Json matrix_doc(const gz::CMatrix& x) { return gz::to_json(x); }

int run(int argc, char** argv) {
  CLI::App app{"Gelfand–Zeitlin integrable-system toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized commands");
  app.add_option("--tol-rank", opt.tol.rank_tol, "Rank tolerance");
  app.add_option("--tol-eq", opt.tol.eq_tol, "Equality tolerance");
  app.add_option("--tol-disjoint", opt.tol.disjoint_tol,
                 "Disjoint-spectrum tolerance");
  app.add_option("-o,--output", opt.output, "Write the result JSON here");

  std::function<Json()> action;
  int forced_exit = 0;

  // phi
  {
    auto* cmd = app.add_subcommand("phi", "Moment-map coordinates of a matrix");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--matrix", *path, "Matrix JSON file")->required();
    cmd->callback([&, path] {
      action = [&, path] {
        gz::CMatrix x = gz::matrix_from_json(gz::load_json_file(*path));
        return gz::to_json(gz::phi(x));
      };
    });
  }

  // invert
  {
    auto* cmd = app.add_subcommand("invert", "Cross-section point of a coordinate vector");
    auto coord = std::make_shared<std::string>();
    auto subdiag = std::make_shared<std::string>();
    cmd->add_option("--coord", *coord, "Coordinate JSON file")->required();
    cmd->add_option("--subdiag", *subdiag, "JSON array of subdiagonal values");
    cmd->callback([&, coord, subdiag] {
      action = [&, coord, subdiag] {
        gz::GZCoord c = gz::coord_from_json(gz::load_json_file(*coord));
        gz::CMatrix x = subdiag->empty()
                            ? gz::invert_phi(c)
                            : gz::invert_phi_with_subdiag(c, subdiag_from_file(*subdiag));
        return matrix_doc(x);
      };
    });
  }

  // classify
  {
    auto* cmd = app.add_subcommand("classify", "Regularity report for a matrix");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--matrix", *path, "Matrix JSON file")->required();
    cmd->callback([&, path] {
      action = [&, path] {
        gz::CMatrix x = gz::matrix_from_json(gz::load_json_file(*path));
        const int n = static_cast<int>(x.rows());
        Json report;
        Json levels = Json::array();
        for (int m = 1; m <= n; ++m) {
          levels.push_back(gz::is_regular_cutoff(x, m, opt.tol.rank_tol));
        }
        report["regular_per_level"] = levels;
        report["strongly_regular"] = gz::is_strongly_regular(x, opt.tol.rank_tol);
        gz::SpectrumTower tower = gz::tower_from_matrix(x, opt.tol.eq_tol);
        report["disjoint"] = gz::is_disjoint(tower, opt.tol.disjoint_tol);
        report["interlacing"] = gz::is_interlacing(tower, opt.tol);
        report["orbit_dim"] = gz::orbit_dim(x, opt.tol.rank_tol);
        return report;
      };
    });
  }

  // flow
  {
    auto* cmd = app.add_subcommand("flow", "Hamiltonian flow of one invariant");
    auto path = std::make_shared<std::string>();
    auto key = std::make_shared<std::string>();
    auto time = std::make_shared<std::string>();
    cmd->add_option("--matrix", *path, "Matrix JSON file")->required();
    cmd->add_option("--key", *key, "Invariant key \"k,m\"")->required();
    cmd->add_option("--t", *time, "Complex time \"re,im\"")->required();
    cmd->callback([&, path, key, time] {
      action = [&, path, key, time] {
        gz::CMatrix x = gz::matrix_from_json(gz::load_json_file(*path));
        auto [k, m] = parse_key(*key);
        return matrix_doc(gz::flow(x, gz::FlowKey{k, m}, gz::parse_complex(*time)));
      };
    });
  }

  // act
  {
    auto* cmd = app.add_subcommand("act", "Abelian group action by a word");
    auto path = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    cmd->add_option("--matrix", *path, "Matrix JSON file")->required();
    cmd->add_option("--word", *word, "Group-word JSON file")->required();
    cmd->callback([&, path, word] {
      action = [&, path, word] {
        gz::CMatrix x = gz::matrix_from_json(gz::load_json_file(*path));
        gz::GroupWord w = gz::word_from_json(gz::load_json_file(*word));
        return matrix_doc(gz::act(x, w));
      };
    });
  }

  // fiber normal-form / fiber symmetric
  {
    auto* fiber = app.add_subcommand("fiber", "Fiber normal forms and enumeration");
    fiber->require_subcommand(1);
    {
      auto* cmd = fiber->add_subcommand("normal-form", "Canonical fiber representative");
      auto path = std::make_shared<std::string>();
      cmd->add_option("--matrix", *path, "Matrix JSON file")->required();
      cmd->callback([&, path] {
        action = [&, path] {
          gz::CMatrix x = gz::matrix_from_json(gz::load_json_file(*path));
          gz::NormalFormResult nf = gz::normal_form(x, opt.tol);
          Json j;
          j["canonical"] = gz::to_json(nf.canonical);
          j["word"] = gz::to_json(nf.word);
          return j;
        };
      });
    }
    {
      auto* cmd = fiber->add_subcommand("symmetric", "Symmetric matrices in a fiber");
      auto path = std::make_shared<std::string>();
      auto jacobi_only = std::make_shared<bool>(false);
      cmd->add_option("--coord", *path, "Coordinate JSON file")->required();
      cmd->add_flag("--jacobi-only", *jacobi_only, "Keep tridiagonal members only");
      cmd->callback([&, path, jacobi_only] {
        action = [&, path, jacobi_only] {
          gz::GZCoord c = gz::coord_from_json(gz::load_json_file(*path));
          auto members = gz::symmetric_fiber(c, opt.tol);
          Json list = Json::array();
          for (const auto& member : members) {
            const bool jac = gz::is_jacobi(member.x, 1e-8);
            if (*jacobi_only && !jac) continue;
            Json entry;
            entry["sign_index"] = member.sign_index;
            entry["jacobi"] = jac;
            entry["matrix"] = gz::to_json(member.x);
            list.push_back(entry);
          }
          Json j;
          j["count"] = list.size();
          j["members"] = list;
          return j;
        };
      });
    }
  }

  // orthopoly jacobi / orthopoly verify
  {
    auto* ortho = app.add_subcommand("orthopoly", "Orthogonal-polynomial bridge");
    ortho->require_subcommand(1);
    {
      auto* cmd = ortho->add_subcommand("jacobi", "Jacobi matrix of a measure");
      auto path = std::make_shared<std::string>();
      auto n = std::make_shared<int>(0);
      cmd->add_option("--measure", *path, "Measure JSON file")->required();
      cmd->add_option("--n", *n, "Matrix size")->required();
      cmd->callback([&, path, n] {
        action = [&, path, n] {
          gz::DiscreteMeasure mu =
              gz::measure_from_json(gz::load_json_file(*path));
          gz::CMatrix j = gz::jacobi_matrix(mu, *n);
          Json out;
          out["jacobi"] = gz::to_json(j);
          gz::SpectrumTower tower = gz::tower_from_matrix(j, opt.tol.eq_tol);
          out["tower"] = gz::to_json(tower);
          gz::ThreeTermRecurrence rec = gz::recurrence_from_tower(tower, opt.tol);
          out["recurrence"]["diag"] = rec.diag;
          out["recurrence"]["offdiag"] = rec.offdiag;
          return out;
        };
      });
    }
    {
      auto* cmd = ortho->add_subcommand(
          "verify", "Match orthonormal polynomials against cutoff charpolys");
      auto path = std::make_shared<std::string>();
      auto n = std::make_shared<int>(0);
      auto tol = std::make_shared<double>(1e-8);
      cmd->add_option("--measure", *path, "Measure JSON file")->required();
      cmd->add_option("--n", *n, "Matrix size")->required();
      cmd->add_option("--tol", *tol, "Coefficient tolerance");
      cmd->callback([&, path, n, tol] {
        action = [&, path, n, tol] {
          gz::DiscreteMeasure mu =
              gz::measure_from_json(gz::load_json_file(*path));
          Json out;
          out["n"] = *n;
          out["match"] = gz::verify_monic_match(mu, *n, *tol);
          return out;
        };
      });
    }
  }

  // poisson verify / poisson bracket
  {
    auto* poisson = app.add_subcommand("poisson", "Exact Poisson-bracket checks");
    poisson->require_subcommand(1);
    {
      auto* cmd = poisson->add_subcommand(
          "verify", "Brackets of all coordinate generators, exact arithmetic");
      auto n = std::make_shared<int>(0);
      cmd->add_option("--n", *n, "Matrix size (at most 4)")->required();
      cmd->callback([&, n] {
        action = [&, n] {
          auto gens = gz::gz_generators_symbolic(*n);
          Json pairs = Json::array();
          bool all_zero = true;
          std::vector<std::string> names;
          for (int m = 1; m <= *n; ++m) {
            for (int k = 1; k <= m; ++k) {
              names.push_back("f(" + std::to_string(k) + "," + std::to_string(m) + ")");
            }
          }
          for (std::size_t a = 0; a < gens.size(); ++a) {
            for (std::size_t b = a + 1; b < gens.size(); ++b) {
              const bool zero = gz::sym_bracket(gens[a], gens[b]).is_zero();
              all_zero = all_zero && zero;
              Json entry;
              entry["f"] = names[a];
              entry["g"] = names[b];
              entry["zero"] = zero;
              pairs.push_back(entry);
            }
          }
          Json out;
          out["n"] = *n;
          out["pairs"] = pairs.size();
          out["all_zero"] = all_zero;
          out["pair_list"] = pairs;
          return out;
        };
      });
    }
    {
      auto* cmd = poisson->add_subcommand(
          "bracket", "Bracket of two entry variables evaluated at a matrix");
      auto f = std::make_shared<std::string>();
      auto g = std::make_shared<std::string>();
      auto path = std::make_shared<std::string>();
      cmd->add_option("--f", *f, "First entry variable, e.g. a_12")->required();
      cmd->add_option("--g", *g, "Second entry variable, e.g. a_21")->required();
      cmd->add_option("--matrix", *path, "Matrix JSON file")->required();
      cmd->callback([&, f, g, path] {
        action = [&, f, g, path] {
          gz::CMatrix x = gz::matrix_from_json(gz::load_json_file(*path));
          const int n = static_cast<int>(x.rows());
          auto [i, j] = parse_entry_variable(*f);
          auto [s, t] = parse_entry_variable(*g);
          if (i > n || j > n || s > n || t > n || i < 1 || j < 1 || s < 1 || t < 1) {
            throw std::invalid_argument("entry variable index exceeds the matrix size");
          }
          gz::SymPoly bracket = gz::sym_bracket(gz::SymPoly::variable(n, i, j),
                                                gz::SymPoly::variable(n, s, t));
          const gz::Complex sym_value = bracket.evaluate(x);
          const gz::Complex num_value = gz::num_bracket(
              gz::entry_gradient(n, i, j), gz::entry_gradient(n, s, t), x);
          Json out;
          out["f"] = *f;
          out["g"] = *g;
          out["value"] = gz::to_json(sym_value);
          out["numeric_value"] = gz::to_json(num_value);
          out["bracket"] = bracket.to_string();
          return out;
        };
      });
    }
  }

  // selftest
  {
    auto* cmd = app.add_subcommand("selftest", "Run the acceptance property suite");
    auto n_max = std::make_shared<int>(5);
    cmd->add_option("--n-max", *n_max, "Largest matrix size exercised (2..6)");
    cmd->callback([&, n_max] {
      action = [&, n_max] {
        auto results = gz::run_selftest(opt.seed, *n_max, opt.tol);
        Json list = Json::array();
        for (const auto& r : results) {
          Json entry;
          entry["name"] = r.name;
          entry["pass"] = r.pass;
          entry["residual"] = r.residual;
          entry["detail"] = r.detail;
          list.push_back(entry);
        }
        Json out;
        out["seed"] = opt.seed;
        out["n_max"] = *n_max;
        out["criteria"] = list;
        out["all_pass"] = gz::all_pass(results);
        if (!gz::all_pass(results)) forced_exit = 3;
        return out;
      };
    });
  }

  // Global options (--seed, tolerances, -o) are accepted after a subcommand
  // as well as before it.
  std::function<void(CLI::App*)> allow_trailing_globals = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_trailing_globals(sub);
    }
  };
  allow_trailing_globals(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    emit(action(), opt.output);
    return forced_exit;
  } catch (const gz::DomainError& e) {
    Json err{{"error", "domain"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const gz::NumericalError& e) {
    Json err{{"error", "numerical"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    Json err{{"error", "invalid-input"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
