// Command-line front end for the wcpieces shared library (C API only).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcpieces.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // verification failure or bound refusal
constexpr int kExitUsage = 2;  // usage / malformed input

struct Global {
  std::string type;
  bool as_json = false;
  bool as_csv = false;
  int max_rank = 4;
  std::uint64_t bound = 0; // 0 = library default
  int jobs = 1;
  std::string config;
};

int status_exit(wcp_status st) {
  switch (st) {
    case WCP_OK: return kExitOk;
    case WCP_ERR_INVALID_ARG: return kExitUsage;
    default: return kExitFail;
  }
}

int fail(wcp_status st) {
  std::cerr << "error: " << wcp_last_error() << "\n";
  return status_exit(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  wcp_string_free(s);
  return out;
}

void load_config(Global& g) {
  if (g.config.empty()) return;
  std::ifstream in(g.config);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config);
  json cfg = json::parse(in);
  if (cfg.contains("bound") && g.bound == 0) g.bound = cfg["bound"].get<std::uint64_t>();
  if (cfg.contains("jobs") && g.jobs == 1) g.jobs = cfg["jobs"].get<int>();
}

struct Handle {
  wcp_root_system* rs = nullptr;
  ~Handle() { wcp_root_system_destroy(rs); }
};

int open_type(const Global& g, Handle& h) {
  if (g.type.empty()) {
    std::cerr << "error: --type is required\n";
    return kExitUsage;
  }
  const wcp_status st = wcp_root_system_create(g.type.c_str(), &h.rs);
  if (st != WCP_OK) return fail(st);
  return kExitOk;
}

void print_piece_rows(const json& arr, bool with_chain, bool csv) {
  if (csv) {
    std::cout << (with_chain ? "J,w,terminal\n" : "J,w\n");
    for (const auto& rec : arr) {
      std::string J = "-", terminal = "-";
      if (!rec["J"].empty()) {
        J.clear();
        for (size_t k = 0; k < rec["J"].size(); ++k)
          J += (k ? "|" : "") + std::to_string(rec["J"][k].get<int>());
      }
      std::cout << J << "," << rec["w"].get<std::string>();
      if (with_chain) {
        if (!rec["terminal"].empty()) {
          terminal.clear();
          for (size_t k = 0; k < rec["terminal"].size(); ++k)
            terminal += (k ? "|" : "") + std::to_string(rec["terminal"][k].get<int>());
        }
        std::cout << "," << terminal;
      }
      std::cout << "\n";
    }
    return;
  }
  for (const auto& rec : arr) {
    std::string J = "-";
    if (!rec["J"].empty()) {
      J.clear();
      for (size_t k = 0; k < rec["J"].size(); ++k)
        J += (k ? "," : "") + std::to_string(rec["J"][k].get<int>());
    }
    std::cout << "J=" << J << "  w=" << rec["w"].get<std::string>();
    if (with_chain && rec.contains("terminal")) {
      std::string t = "-";
      if (!rec["terminal"].empty()) {
        t.clear();
        for (size_t k = 0; k < rec["terminal"].size(); ++k)
          t += (k ? "," : "") + std::to_string(rec["terminal"][k].get<int>());
      }
      std::cout << "  terminal=" << t;
    }
    std::cout << "\n";
  }
}

void print_reports(const json& reports) {
  for (const auto& r : reports) {
    std::cout << (r["status"] == "pass" ? "PASS " : "FAIL ") << r["name"].get<std::string>()
              << "\n";
    for (const auto& c : r["checks"]) {
      if (c["status"] == "pass") continue;
      std::cout << "  FAIL " << c["claim"].get<std::string>();
      if (c.contains("witness")) std::cout << " [" << c["witness"].get<std::string>() << "]";
      std::cout << "\n";
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of G-stable pieces in wonderful compactifications"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand
  Global g;
  app.add_option("--type", g.type, "root-system type, e.g. A3, B2, G2")->envname("WCP_TYPE");
  app.add_flag("--json", g.as_json, "machine-readable JSON output");
  app.add_flag("--csv", g.as_csv, "CSV output for list commands");
  app.add_option("--max-rank", g.max_rank, "rank cap for roster suites (default 4)");
  app.add_option("--bound", g.bound, "enumeration bound (default 1000000)");
  app.add_option("--jobs", g.jobs, "worker threads for verify suites");
  app.add_option("--config", g.config, "JSON config file ({\"bound\": N, \"jobs\": N})");

  // pieces
  auto* cmd_pieces = app.add_subcommand("pieces", "list piece labels (J, w)");
  bool with_chain = false;
  cmd_pieces->add_flag("--with-chain", with_chain, "include the chain and terminal subset");

  // boundary
  auto* cmd_boundary = app.add_subcommand("boundary", "pieces of the boundary of Ubar");
  bool b_count = false, b_check = false;
  cmd_boundary->add_flag("--count", b_count, "print the boundary point-count polynomial");
  cmd_boundary->add_flag("--check", b_check, "verify the double-count identity");

  // closure
  auto* cmd_closure = app.add_subcommand("closure", "closure queries");
  std::string a_label, b_label, cox_w;
  int cox_i = 0;
  bool cox_piece = false;
  cmd_closure->add_option("--a", a_label, "orbit label J|x|w (e.g. \"1|2|-\")");
  cmd_closure->add_option("--b", b_label, "orbit label J|x|w");
  cmd_closure->add_flag("--coxeter-piece", cox_piece, "closure of a Coxeter piece");
  cmd_closure->add_option("--i", cox_i, "index i with J = I-{i}");
  cmd_closure->add_option("--w", cox_w, "Coxeter element word, e.g. \"1 2\"");

  // count
  auto* cmd_count = app.add_subcommand("count", "point-count polynomials");
  bool c_group = false, c_boundary = false;
  std::string c_piece;
  cmd_count->add_flag("--group", c_group, "|Gbar|_q");
  cmd_count->add_flag("--boundary", c_boundary, "|Ubar - U|_q");
  cmd_count->add_option("--piece", c_piece, "piece label \"J|w\" (e.g. \"1|1 2\")");

  // coxeter
  auto* cmd_coxeter = app.add_subcommand("coxeter", "Coxeter-element tools");
  bool x_list = false, x_wj = false, x_check = false;
  int x_i = 0;
  std::vector<std::string> x_conj;
  cmd_coxeter->add_flag("--list", x_list, "all Coxeter elements");
  cmd_coxeter->add_flag("--wj", x_wj, "layer construction of w^J for J = I-{i}");
  cmd_coxeter->add_option("--conj", x_conj, "two Coxeter words to conjugate")->expected(2);
  cmd_coxeter->add_flag("--check-chain", x_check, "replay the layer chain against its closed forms");
  cmd_coxeter->add_option("--i", x_i, "index i");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  cmd_verify->add_option("--suite", suite, "counts|chains|coxeter|lemma32|section3|all");

  try {
    app.parse(argc, argv);
    load_config(g);
  } catch (const CLI::ParseError& e) {
    // CLI11's exit() prints help or an error; map all parse issues to 2, keep
    // --help's 0.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_pieces->parsed()) {
      Handle h;
      if (int rc = open_type(g, h)) return rc;
      char* out = nullptr;
      const wcp_status st = wcp_pieces_json(h.rs, with_chain ? 1 : 0, g.bound, &out);
      if (st != WCP_OK) return fail(st);
      const std::string text = take(out);
      if (g.as_json) std::cout << text << "\n";
      else print_piece_rows(json::parse(text), with_chain, g.as_csv);
      return kExitOk;
    }

    if (cmd_boundary->parsed()) {
      Handle h;
      if (int rc = open_type(g, h)) return rc;
      json result;
      char* out = nullptr;
      if (b_count || b_check) {
        wcp_status st = wcp_count_boundary_json(h.rs, g.bound, &out);
        if (st != WCP_OK) return fail(st);
        result["count"] = json::parse(take(out));
      }
      if (!b_count || b_check) {
        wcp_status st = wcp_boundary_json(h.rs, g.bound, &out);
        if (st != WCP_OK) return fail(st);
        result["pieces"] = json::parse(take(out));
      }
      bool check_ok = true;
      if (b_check) {
        // Sum the per-piece polynomials and compare with the closed formula.
        std::vector<long long> sum;
        for (const auto& rec : result["pieces"]) {
          std::string J = "-";
          if (!rec["J"].empty()) {
            J.clear();
            for (size_t k = 0; k < rec["J"].size(); ++k)
              J += (k ? "," : "") + std::to_string(rec["J"][k].get<int>());
          }
          wcp_status st = wcp_count_piece_json(h.rs, J.c_str(), rec["w"].get<std::string>().c_str(),
                                               g.bound, &out);
          if (st != WCP_OK) return fail(st);
          const json poly = json::parse(take(out));
          const auto& coeffs = poly["coeffs"];
          if (sum.size() < coeffs.size()) sum.resize(coeffs.size(), 0);
          for (size_t k = 0; k < coeffs.size(); ++k) sum[k] += coeffs[k].get<long long>();
        }
        while (!sum.empty() && sum.back() == 0) sum.pop_back();
        std::vector<long long> closed;
        for (const auto& c : result["count"]["coeffs"]) closed.push_back(c.get<long long>());
        check_ok = sum == closed;
        result["check"] = check_ok ? "pass" : "fail";
      }
      if (g.as_json) {
        std::cout << result.dump() << "\n";
      } else {
        if (result.contains("count"))
          std::cout << result["count"]["str"].get<std::string>() << "\n";
        if (!b_count && result.contains("pieces"))
          print_piece_rows(result["pieces"], false, g.as_csv);
        if (b_check) std::cout << (check_ok ? "double-count: pass\n" : "double-count: fail\n");
      }
      return check_ok ? kExitOk : kExitFail;
    }

    if (cmd_closure->parsed()) {
      Handle h;
      if (int rc = open_type(g, h)) return rc;
      char* out = nullptr;
      if (cox_piece) {
        if (cox_i == 0 || cox_w.empty()) {
          std::cerr << "error: --coxeter-piece needs --i and --w\n";
          return kExitUsage;
        }
        const wcp_status st =
            wcp_coxeter_piece_closure_json(h.rs, cox_i, cox_w.c_str(), g.bound, &out);
        if (st != WCP_OK) return fail(st);
        const std::string text = take(out);
        if (g.as_json) std::cout << text << "\n";
        else print_piece_rows(json::parse(text), false, g.as_csv);
        return kExitOk;
      }
      if (a_label.empty() || b_label.empty()) {
        std::cerr << "error: closure needs --a and --b (or --coxeter-piece)\n";
        return kExitUsage;
      }
      const wcp_status st =
          wcp_closure_contains_json(h.rs, a_label.c_str(), b_label.c_str(), g.bound, &out);
      if (st != WCP_OK) return fail(st);
      const std::string text = take(out);
      if (g.as_json) {
        std::cout << text << "\n";
      } else {
        const json res = json::parse(text);
        if (res["contains"].get<bool>())
          std::cout << "true  witness u=" << res["witness"]["u"].get<std::string>()
                    << "  v=" << res["witness"]["v"].get<std::string>() << "\n";
        else
          std::cout << "false\n";
      }
      return kExitOk;
    }

    if (cmd_count->parsed()) {
      Handle h;
      if (int rc = open_type(g, h)) return rc;
      char* out = nullptr;
      wcp_status st = WCP_OK;
      if (c_group) {
        st = wcp_count_group_json(h.rs, g.bound, &out);
      } else if (c_boundary) {
        st = wcp_count_boundary_json(h.rs, g.bound, &out);
      } else if (!c_piece.empty()) {
        const auto bar = c_piece.find('|');
        if (bar == std::string::npos) {
          std::cerr << "error: --piece expects \"J|w\"\n";
          return kExitUsage;
        }
        st = wcp_count_piece_json(h.rs, c_piece.substr(0, bar).c_str(),
                                  c_piece.substr(bar + 1).c_str(), g.bound, &out);
      } else {
        std::cerr << "error: count needs --group, --boundary or --piece\n";
        return kExitUsage;
      }
      if (st != WCP_OK) return fail(st);
      const std::string text = take(out);
      if (g.as_json) std::cout << text << "\n";
      else std::cout << json::parse(text)["str"].get<std::string>() << "\n";
      return kExitOk;
    }

    if (cmd_coxeter->parsed()) {
      Handle h;
      if (int rc = open_type(g, h)) return rc;
      char* out = nullptr;
      if (x_list) {
        const wcp_status st = wcp_coxeter_list_json(h.rs, &out);
        if (st != WCP_OK) return fail(st);
        const std::string text = take(out);
        if (g.as_json) std::cout << text << "\n";
        else
          for (const auto& w : json::parse(text)) std::cout << w.get<std::string>() << "\n";
        return kExitOk;
      }
      if (x_wj) {
        if (x_i == 0) {
          std::cerr << "error: --wj needs --i\n";
          return kExitUsage;
        }
        const wcp_status st = wcp_coxeter_wj_json(h.rs, x_i, &out);
        if (st != WCP_OK) return fail(st);
        const std::string text = take(out);
        if (g.as_json) std::cout << text << "\n";
        else std::cout << "w^J = " << json::parse(text)["wJ"].get<std::string>() << "\n";
        return kExitOk;
      }
      if (!x_conj.empty()) {
        if (x_i == 0) {
          std::cerr << "error: --conj needs --i\n";
          return kExitUsage;
        }
        const wcp_status st =
            wcp_conjugating_word_json(h.rs, x_conj[0].c_str(), x_conj[1].c_str(), x_i, &out);
        if (st != WCP_OK) return fail(st);
        const std::string text = take(out);
        if (g.as_json) std::cout << text << "\n";
        else std::cout << json::parse(text)["word"].get<std::string>() << "\n";
        return kExitOk;
      }
      if (x_check) {
        if (x_i == 0) {
          std::cerr << "error: --check-chain needs --i\n";
          return kExitUsage;
        }
        const wcp_status st = wcp_check_layer_chain_json(h.rs, x_i, &out);
        if (st != WCP_OK) return fail(st);
        const std::string text = take(out);
        const json rep = json::parse(text);
        if (g.as_json) std::cout << text << "\n";
        else print_reports(json::array({rep}));
        return rep["status"] == "pass" ? kExitOk : kExitFail;
      }
      std::cerr << "error: coxeter needs --list, --wj, --conj or --check-chain\n";
      return kExitUsage;
    }

    if (cmd_verify->parsed()) {
      char* out = nullptr;
      int all_pass = 0;
      const wcp_status st = wcp_verify_json(suite.c_str(), g.type.empty() ? nullptr : g.type.c_str(),
                                            g.max_rank, g.bound, g.jobs, &out, &all_pass);
      if (st != WCP_OK) return fail(st);
      const std::string text = take(out);
      if (g.as_json) std::cout << text << "\n";
      else print_reports(json::parse(text));
      return all_pass ? kExitOk : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
