// Command-line front end: parses algebra files, dispatches the library
// operations and prints results in a stable, byte-reproducible form.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ualg/congruence.hpp"
#include "ualg/error.hpp"
#include "ualg/fingerprint.hpp"
#include "ualg/io.hpp"
#include "ualg/morphism.hpp"
#include "ualg/oracle.hpp"
#include "ualg/structure.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ualg;

struct Options {
  std::string format = "gap";
  bool check = false;
  int threads = 1;
  int endo_threshold = default_endo_size_threshold;
  bool exists = false;
  bool one = false;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_format(const Options& opt) { return opt.format == "json"; }

ordered_json partition_json(const Partition& p) {
  return ordered_json{{"forest", p.forest()}, {"blocks", p.blocks()}};
}

std::string partition_line(const Partition& p) {
  return forest_string(p) + " - " + blocks_string(p);
}

std::string print_partitions(const std::vector<Partition>& parts,
                             const Options& opt, const char* key) {
  if (json_format(opt)) {
    ordered_json j;
    j["count"] = parts.size();
    auto& list = j[key] = ordered_json::array();
    for (const auto& p : parts) {
      list.push_back(partition_json(p));
    }
    return j.dump() + "\n";
  }
  std::string out;
  for (const auto& p : parts) {
    out += partition_line(p) + "\n";
  }
  return out;
}

std::string print_mappings(const std::vector<Mapping>& maps,
                           const Options& opt) {
  if (json_format(opt)) {
    ordered_json j;
    j["count"] = maps.size();
    auto& list = j["maps"] = ordered_json::array();
    for (const auto& f : maps) {
      list.push_back(f.images);
    }
    return j.dump() + "\n";
  }
  std::string out;
  for (const auto& f : maps) {
    out += mapping_string(f) + "\n";
  }
  return out;
}

std::string print_bool(bool value, const Options& opt, const char* key) {
  if (json_format(opt)) {
    return ordered_json{{key, value}}.dump() + "\n";
  }
  return value ? "true\n" : "false\n";
}

std::string print_optional_mapping(const std::optional<Mapping>& f,
                                   const Options& opt, const char* key) {
  if (json_format(opt)) {
    ordered_json j;
    j[key] = f.has_value();
    if (f) {
      j["witness"] = f->images;
    }
    return j.dump() + "\n";
  }
  return f ? mapping_string(*f) + "\n" : "fail\n";
}

// ---------------------------------------------------------------------
// --check helpers: recompute through the brute-force oracles when the
// input is small enough; a SizeTooLarge from the oracle skips the check.

template <typename Fn>
void run_check(const Options& opt, Fn&& fn) {
  if (!opt.check) {
    return;
  }
  try {
    fn();
  } catch (const SizeTooLarge&) {
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    throw CheckFailure("oracle mismatch: " + what);
  }
}

std::vector<Partition> oracle_principal_set(const Algebra& a) {
  std::set<Partition, PartitionLess> out;
  for (int x = 1; x <= a.size; ++x) {
    for (int y = x + 1; y <= a.size; ++y) {
      out.insert(oracle_principal_congruence(a, x, y));
    }
  }
  return {out.begin(), out.end()};
}

bool oracle_monolithic(const Algebra& a) {
  const Partition id = Partition::identity(a.size);
  std::vector<Partition> nontrivial;
  for (const auto& c : oracle_congruences(a)) {
    if (!(c == id)) {
      nontrivial.push_back(c);
    }
  }
  for (const auto& m : nontrivial) {
    bool below_all = true;
    for (const auto& c : nontrivial) {
      if (!contained(m, c)) {
        below_all = false;
        break;
      }
    }
    if (below_all) {
      return true;
    }
  }
  return false;
}

std::vector<DivisorWitness> oracle_divisors(const Algebra& a1,
                                            const Algebra& a2) {
  std::vector<DivisorWitness> out;
  for (const auto& universe : oracle_subuniverses(a1)) {
    if (static_cast<int>(universe.size()) < a2.size) {
      continue;
    }
    auto sub = subalgebra_from_universe(a1, universe);
    for (const auto& cong : oracle_congruences(sub.algebra)) {
      if (number_of_blocks(cong) != a2.size) {
        continue;
      }
      auto q = quotient_algebra(sub.algebra, cong);
      if (q.quotient.size == a2.size &&
          !oracle_maps(q.quotient, a2, MapKind::automorphism).empty()) {
        out.push_back({universe, cong});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------

int run_command(const std::function<std::string()>& action) {
  try {
    std::cout << action();
    return 0;
  } catch (const CheckFailure& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruences, morphisms and structure of finite algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "gap"}))
        ->capture_default_str();
    sub->add_flag("--check", opt.check,
                  "re-verify the result against the brute-force oracle "
                  "when the input is small enough");
    sub->add_option("--threads", opt.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--endo-threshold", opt.endo_threshold,
                    "largest size handled by the direct endomorphism search")
        ->capture_default_str();
  };
  auto add_variants = [&opt](CLI::App* sub) {
    auto* e = sub->add_flag("--exists", opt.exists,
                            "report only whether a solution exists");
    auto* o = sub->add_flag("--one", opt.one, "report only one solution");
    e->excludes(o);
    o->excludes(e);
  };

  std::string file_a;
  std::string file_b;
  int group_order = 1;
  int rows = 1;
  int cols = 1;
  std::uint32_t seed = 1;
  int size = 1;
  bool with_monolithic = false;
  bool with_aut = false;
  std::function<std::string()> action;

  auto single_file = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file_a, "algebra file")->required();
    add_common(sub);
    return sub;
  };
  auto two_files = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("fileA", file_a, "source algebra file")->required();
    sub->add_option("fileB", file_b, "target algebra file")->required();
    add_common(sub);
    add_variants(sub);
    return sub;
  };

  single_file("congruences", "all congruences")->callback([&] {
    action = [&]() {
      Algebra a = load_algebra_file(file_a);
      auto congs = all_congruences(a, opt.threads);
      run_check(opt, [&] {
        expect(congs == oracle_congruences(a), "congruence set");
      });
      return print_partitions(congs, opt, "congruences");
    };
  });

  single_file("principal-congruences", "all principal congruences")
      ->callback([&] {
        action = [&]() {
          Algebra a = load_algebra_file(file_a);
          auto congs = all_principal_congruences(a, opt.threads);
          run_check(opt, [&] {
            expect(congs == oracle_principal_set(a), "principal congruences");
          });
          return print_partitions(congs, opt, "congruences");
        };
      });

  single_file("monolithic",
              "whether there is a unique minimal nontrivial congruence")
      ->callback([&] {
        action = [&]() {
          Algebra a = load_algebra_file(file_a);
          bool mono = is_monolithic(a);
          run_check(opt, [&] {
            expect(mono == oracle_monolithic(a), "monolithic flag");
          });
          return print_bool(mono, opt, "monolithic");
        };
      });

  single_file("automorphisms", "all automorphisms")->callback([&] {
    action = [&]() {
      Algebra a = load_algebra_file(file_a);
      auto maps = algebra_automorphisms(a);
      run_check(opt, [&] {
        expect(maps == oracle_maps(a, a, MapKind::automorphism),
               "automorphism set");
      });
      return print_mappings(maps, opt);
    };
  });

  single_file("endomorphisms", "all endomorphisms")->callback([&] {
    action = [&]() {
      Algebra a = load_algebra_file(file_a);
      auto maps = endomorphisms(a, opt.endo_threshold);
      run_check(opt, [&] {
        expect(maps == oracle_maps(a, a, MapKind::endomorphism),
               "endomorphism set");
      });
      return print_mappings(maps, opt);
    };
  });

  single_file("invariants",
              "per-element invariant vectors of the first binary operation")
      ->callback([&] {
        action = [&]() {
          Algebra a = load_algebra_file(file_a);
          if (a.binary.empty()) {
            throw NoOperations("invariant vectors need a binary operation");
          }
          auto vectors = all_invariant_vectors(a.binary[0]);
          if (json_format(opt)) {
            ordered_json j;
            auto& list = j["vectors"] = ordered_json::array();
            for (const auto& v : vectors) {
              list.push_back(std::vector<int>(v.begin(), v.end()));
            }
            return j.dump() + "\n";
          }
          std::string out;
          for (const auto& v : vectors) {
            for (size_t k = 0; k < v.size(); ++k) {
              if (k > 0) {
                out += ' ';
              }
              out += std::to_string(v[k]);
            }
            out += '\n';
          }
          return out;
        };
      });

  single_file("subuniverses", "all non-empty closed subsets")->callback([&] {
    action = [&]() {
      Algebra a = load_algebra_file(file_a);
      auto subs = all_subuniverses(a);
      run_check(opt, [&] {
        expect(subs == oracle_subuniverses(a), "subuniverse set");
      });
      if (json_format(opt)) {
        ordered_json j;
        j["count"] = subs.size();
        j["subuniverses"] = subs;
        return j.dump() + "\n";
      }
      std::string out;
      for (const auto& s : subs) {
        out += int_list_string(s) + "\n";
      }
      return out;
    };
  });

  {
    auto* sub = app.add_subcommand(
        "directly-reducible",
        "congruence pairs certifying a direct-product decomposition");
    sub->add_option("file", file_a, "algebra file")->required();
    add_common(sub);
    add_variants(sub);
    sub->callback([&] {
      action = [&]() {
        Algebra a = load_algebra_file(file_a);
        if (opt.exists) {
          bool found = exists_directly_reducible(a);
          run_check(opt, [&] {
            expect(found == !oracle_directly_reducible(a).empty(),
                   "directly-reducible existence");
          });
          return print_bool(found, opt, "exists");
        }
        if (opt.one) {
          auto pair = one_directly_reducible(a);
          run_check(opt, [&] {
            expect(pair.has_value() == !oracle_directly_reducible(a).empty(),
                   "directly-reducible existence");
          });
          if (json_format(opt)) {
            ordered_json j;
            j["found"] = pair.has_value();
            if (pair) {
              j["witness"] = ordered_json::array(
                  {pair->first.forest(), pair->second.forest()});
            }
            return j.dump() + "\n";
          }
          return pair ? forest_string(pair->first) + " - " +
                            forest_string(pair->second) + "\n"
                      : std::string("fail\n");
        }
        auto pairs = directly_reducible(a);
        run_check(opt, [&] {
          expect(pairs == oracle_directly_reducible(a),
                 "directly-reducible pairs");
        });
        if (json_format(opt)) {
          ordered_json j;
          j["count"] = pairs.size();
          auto& list = j["pairs"] = ordered_json::array();
          for (const auto& [phi, psi] : pairs) {
            list.push_back(ordered_json::array({phi.forest(), psi.forest()}));
          }
          return j.dump() + "\n";
        }
        std::string out;
        for (const auto& [phi, psi] : pairs) {
          out += forest_string(phi) + " - " + forest_string(psi) + "\n";
        }
        return out;
      };
    });
  }

  two_files("monomorphisms", "injective homomorphisms from A to B")
      ->callback([&] {
        action = [&]() {
          Algebra a = load_algebra_file(file_a);
          Algebra b = load_algebra_file(file_b);
          if (opt.exists) {
            bool found = exists_monomorphism(a, b);
            run_check(opt, [&] {
              expect(found ==
                         !oracle_maps(a, b, MapKind::monomorphism).empty(),
                     "monomorphism existence");
            });
            return print_bool(found, opt, "exists");
          }
          if (opt.one) {
            auto f = one_monomorphism(a, b);
            run_check(opt, [&] {
              expect(f.has_value() ==
                         !oracle_maps(a, b, MapKind::monomorphism).empty(),
                     "monomorphism existence");
              expect(!f || (is_homomorphism(*f, a, b) && f->is_injective()),
                     "monomorphism witness");
            });
            return print_optional_mapping(f, opt, "found");
          }
          auto maps = all_monomorphisms(a, b);
          run_check(opt, [&] {
            expect(maps == oracle_maps(a, b, MapKind::monomorphism),
                   "monomorphism set");
          });
          return print_mappings(maps, opt);
        };
      });

  two_files("epimorphisms", "surjective homomorphisms from A onto B")
      ->callback([&] {
        action = [&]() {
          Algebra a = load_algebra_file(file_a);
          Algebra b = load_algebra_file(file_b);
          if (opt.exists) {
            bool found = exists_epimorphism(a, b);
            run_check(opt, [&] {
              expect(found == !oracle_maps(a, b, MapKind::epimorphism).empty(),
                     "epimorphism existence");
            });
            return print_bool(found, opt, "exists");
          }
          if (opt.one) {
            auto f = one_epimorphism(a, b);
            run_check(opt, [&] {
              expect(f.has_value() ==
                         !oracle_maps(a, b, MapKind::epimorphism).empty(),
                     "epimorphism existence");
              expect(!f || (is_homomorphism(*f, a, b) &&
                            f->is_surjective_onto(b.size)),
                     "epimorphism witness");
            });
            return print_optional_mapping(f, opt, "found");
          }
          auto maps = all_epimorphisms(a, b);
          run_check(opt, [&] {
            expect(maps == oracle_maps(a, b, MapKind::epimorphism),
                   "epimorphism set");
          });
          return print_mappings(maps, opt);
        };
      });

  two_files("isomorphic", "isomorphism witness between A and B")
      ->callback([&] {
        action = [&]() {
          Algebra a = load_algebra_file(file_a);
          Algebra b = load_algebra_file(file_b);
          auto f = are_isomorphic(a, b);
          run_check(opt, [&] {
            bool oracle_iso =
                a.size == b.size &&
                !oracle_maps(a, b, MapKind::automorphism).empty();
            expect(f.has_value() == oracle_iso, "isomorphism existence");
            expect(!f || (is_homomorphism(*f, a, b) && f->is_injective()),
                   "isomorphism witness");
          });
          if (opt.exists) {
            return print_bool(f.has_value(), opt, "exists");
          }
          if (json_format(opt)) {
            ordered_json j;
            j["isomorphic"] = f.has_value();
            if (f) {
              j["witness"] = f->images;
            }
            return j.dump() + "\n";
          }
          return f ? mapping_string(*f) + "\n" : std::string("fail\n");
        };
      });

  two_files("divisors", "witnesses that B divides A")->callback([&] {
    action = [&]() {
      Algebra a = load_algebra_file(file_a);
      Algebra b = load_algebra_file(file_b);
      if (opt.exists) {
        bool found = exists_divisor(a, b);
        run_check(opt, [&] {
          expect(found == !oracle_divisors(a, b).empty(), "divisor existence");
        });
        return print_bool(found, opt, "exists");
      }
      if (opt.one) {
        auto w = one_divisor(a, b);
        run_check(opt, [&] {
          expect(w.has_value() == !oracle_divisors(a, b).empty(),
                 "divisor existence");
        });
        if (json_format(opt)) {
          ordered_json j;
          j["found"] = w.has_value();
          if (w) {
            j["witness"] = ordered_json{{"subuniverse", w->subuniverse},
                                        {"congruence", w->congruence.forest()}};
          }
          return j.dump() + "\n";
        }
        return w ? int_list_string(w->subuniverse) + " - " +
                       forest_string(w->congruence) + "\n"
                 : std::string("fail\n");
      }
      auto witnesses = all_divisor_witnesses(a, b);
      run_check(opt, [&] {
        expect(witnesses == oracle_divisors(a, b), "divisor witnesses");
      });
      if (json_format(opt)) {
        ordered_json j;
        j["count"] = witnesses.size();
        auto& list = j["witnesses"] = ordered_json::array();
        for (const auto& w : witnesses) {
          list.push_back(ordered_json{{"subuniverse", w.subuniverse},
                                      {"congruence", w.congruence.forest()}});
        }
        return j.dump() + "\n";
      }
      std::string out;
      for (const auto& w : witnesses) {
        out += int_list_string(w.subuniverse) + " - " +
               forest_string(w.congruence) + "\n";
      }
      return out;
    };
  });

  {
    auto* gen = app.add_subcommand("gen", "generate benchmark algebras");
    gen->require_subcommand(1);
    auto* rees = gen->add_subcommand(
        "rees", "Rees matrix semigroup over a cyclic group");
    rees->add_option("--group-order", group_order, "cyclic group order")
        ->required()
        ->check(CLI::PositiveNumber);
    rees->add_option("--rows", rows, "row index count")
        ->required()
        ->check(CLI::PositiveNumber);
    rees->add_option("--cols", cols, "column index count")
        ->required()
        ->check(CLI::PositiveNumber);
    rees->add_option("--seed", seed, "sandwich matrix seed")
        ->capture_default_str();
    add_common(rees);
    rees->callback([&] {
      action = [&]() {
        Algebra a =
            rees_matrix_semigroup(group_order, rows, cols, std::nullopt, seed);
        run_check(opt, [&] {
          const auto& f = a.binary[0];
          for (int x = 1; x <= a.size; ++x) {
            for (int y = 1; y <= a.size; ++y) {
              for (int z = 1; z <= a.size; ++z) {
                expect(f[f[x - 1][y - 1] - 1][z - 1] ==
                           f[x - 1][f[y - 1][z - 1] - 1],
                       "associativity of the generated table");
              }
            }
          }
        });
        return json_format(opt) ? emit_algebra_json(a) : emit_algebra_gap(a);
      };
    });
  }

  {
    auto* enumerate =
        app.add_subcommand("enumerate", "enumerate small algebras");
    enumerate->require_subcommand(1);
    auto* semis = enumerate->add_subcommand(
        "semigroups",
        "associative tables up to isomorphism and anti-isomorphism");
    semis->add_option("--size", size, "carrier size (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    semis->add_flag("--monolithic", with_monolithic,
                    "also count the monolithic classes");
    semis->add_flag("--aut-counts", with_aut,
                    "also report the automorphism-group size distribution");
    add_common(semis);
    semis->callback([&] {
      action = [&]() {
        auto reps = enumerate_semigroups(size, opt.threads);
        int monolithic = 0;
        std::map<size_t, int> aut_hist;
        if (with_monolithic) {
          for (const auto& rep : reps) {
            if (rep.size >= 2 && is_monolithic(rep)) {
              ++monolithic;
            }
          }
        }
        if (with_aut) {
          for (const auto& rep : reps) {
            ++aut_hist[algebra_automorphisms(rep).size()];
          }
        }
        if (json_format(opt)) {
          ordered_json j;
          j["size"] = size;
          j["classes"] = reps.size();
          if (with_monolithic) {
            j["monolithic"] = monolithic;
          }
          if (with_aut) {
            ordered_json hist;
            for (const auto& [k, v] : aut_hist) {
              hist[std::to_string(k)] = v;
            }
            j["aut_sizes"] = hist;
          }
          return j.dump() + "\n";
        }
        std::string out = "size " + std::to_string(size) + ": " +
                          std::to_string(reps.size()) + "\n";
        if (with_monolithic) {
          out += "monolithic: " + std::to_string(monolithic) + "\n";
        }
        if (with_aut) {
          out += "aut sizes:";
          for (const auto& [k, v] : aut_hist) {
            out += " " + std::to_string(k) + ":" + std::to_string(v);
          }
          out += "\n";
        }
        return out;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return run_command(action);
}
