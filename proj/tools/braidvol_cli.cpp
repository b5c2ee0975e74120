#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidvol/braidvol.hpp"

namespace bv = braidvol;
using nlohmann::json;

namespace {

enum Exit : int { ok = 0, identity_failure = 1, usage = 2, gate = 3 };

struct Globals {
  std::optional<int> n;
  bool json = false;
  std::uint64_t seed = 1;
  bool bracket = false;
  std::size_t max_crossings = bv::default_max_crossings;
  bool unsafe_assume_prime = false;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

bv::AnalysisOptions options(const Globals& g) {
  bv::AnalysisOptions o;
  o.bracket = g.bracket;
  o.max_crossings = g.max_crossings;
  o.unsafe_assume_prime = g.unsafe_assume_prime;
  return o;
}

bv::SyllableWord read_word(const std::vector<std::string>& parts, const Globals& g) {
  return bv::cyclically_reduce_into_syllables(bv::parse_braid(join(parts), g.n));
}

// Maps library exceptions onto exit codes.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const bv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const bv::InfeasibleSpec& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const bv::GateError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return gate;
  } catch (const bv::CrossingCapExceeded& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return gate;
  } catch (const bv::OracleError& e) {
    std::cerr << "oracle: " << e.what() << '\n';
    return gate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return gate;
  }
}

void print_bounds(std::ostream& os, const char* label, const bv::VolumeBounds& b) {
  os << label << ": " << bv::name(b.kind) << " lower " << b.lower;
  if (b.lower_weak) os << " (weak " << *b.lower_weak << ")";
  if (b.vacuous_lower()) os << " [vacuous]";
  os << ", upper " << b.upper << '\n';
}

void print_human(std::ostream& os, const bv::AnalysisReport& r) {
  const auto& w = r.word;
  os << "word: " << (w.empty() ? "(empty)" : bv::to_string(w)) << "  n=" << w.strands << "  c=" << r.crossings
     << "  t=" << r.twist.t << " (t+=" << r.twist.t_plus << ", t-=" << r.twist.t_minus << ")\n";
  os << "circles:";
  for (auto c : bv::all_circle_classes)
    if (r.state.count(c) > 0) os << ' ' << bv::name(c) << '=' << r.state.count(c);
  os << "  m=" << r.state.m() << '\n';
  os << "G'_A: v=" << r.graph.v << " e=" << r.graph.e << " -chi=" << r.graph.neg_chi << "  A-adequate=" << r.A_adequate
     << " TELC=" << r.TELC << " connected=" << r.connected << "  OC identity: " << bv::name(r.oc_identity) << '\n';
  os << "main lemma: " << (r.main_lemma.pass ? "pass" : "fail");
  if (!r.main_lemma.pass) {
    if (!r.main_lemma.nice) os << "; not nice";
    if (!r.main_lemma.cond1) os << "; cond1 fails at " << r.main_lemma.cond1_failures.size() << " syllable(s)";
    for (const auto& f : r.main_lemma.cond2_failures)
      os << "; " << bv::name(f.clause) << " at syllable " << f.syllable << ": " << f.reason;
    if (!r.main_lemma.twist_ok) os << "; t < 2(n-1)";
  }
  os << '\n';
  if (r.stoimenow) os << "stoimenow: " << bv::name(r.stoimenow->verdict) << " (" << r.stoimenow->reason << ")\n";
  if (r.bounds) print_bounds(os, "bounds", *r.bounds);
  if (r.bounds_error) os << "bounds error: " << *r.bounds_error << '\n';
  if (r.jones_bounds) print_bounds(os, "jones bounds", *r.jones_bounds);
  if (r.schreier) {
    const auto& s = *r.schreier;
    os << "schreier: " << bv::to_string(s.form) << "  k=" << s.form.k << " s=" << s.form.s << " ("
       << bv::name(s.form.kind) << ")  hyperbolic=" << s.hyperbolicity.hyperbolic << '\n';
  }
  if (r.s_bounds) {
    print_bounds(os, "s bounds", r.s_bounds->schreier3);
    print_bounds(os, "s bounds", r.s_bounds->fkp3);
  }
  if (r.turaev) os << "turaev genus: " << r.turaev->first << " <= g_T <= " << r.turaev->second << '\n';
  if (r.bracket) {
    os << "bracket: " << r.bracket->polynomial.to_string() << '\n';
    if (r.bracket->summary) os << "penultimate |beta'| = " << r.bracket->summary->penultimate_abs << '\n';
  }
}

std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  const auto b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

json batch_record(std::size_t line, const std::string& text, const Globals& g) {
  json err;
  try {
    json rec = bv::to_json(bv::analyze(text, g.n, options(g)));
    rec["line"] = line;
    return rec;
  } catch (const bv::ParseError& e) {
    err = {{"kind", "parse"}, {"message", e.what()}};
  } catch (const bv::GateError& e) {
    err = {{"kind", "precondition"}, {"message", e.what()}};
  } catch (const bv::CrossingCapExceeded& e) {
    err = {{"kind", "precondition"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    err = {{"kind", "internal"}, {"message", e.what()}};
  }
  return {{"schema", bv::report_schema}, {"line", line}, {"input", text}, {"error", err}};
}

int cmd_batch(const std::string& path, unsigned threads, const Globals& g) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return usage;
  }
  std::vector<std::pair<std::size_t, std::string>> jobs;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string text = strip_comment(raw);
    if (!text.empty()) jobs.emplace_back(line, std::move(text));
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::string> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
      out[i] = batch_record(jobs[i].first, jobs[i].second, g).dump();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& s : out) std::cout << s << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-braid all-A state analysis, volume bounds and 3-braid normal forms"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--n", g.n, "strand count (default: max generator + 1)")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "64-bit generator seed");
  app.add_flag("--bracket", g.bracket, "run the Kauffman bracket oracle");
  app.add_option("--max-crossings", g.max_crossings, "crossing cap for the bracket oracle")->capture_default_str();
  app.add_flag("--unsafe-assume-prime", g.unsafe_assume_prime,
               "report the generic bound for adequate TELC diagrams outside the family, assuming primeness");

  std::vector<std::string> word;
  auto add_word = [&](CLI::App* sub) { sub->add_option("word", word, "braid word, e.g. \"s1^-3 s2^-3\"")->expected(0, -1); };

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  add_word(analyze);
  bool require_jones = false;
  analyze->add_flag("--jones", require_jones, "fail with exit 3 when the Jones-coefficient bounds do not apply");

  auto* batch = app.add_subcommand("batch", "analyze one word per line, JSONL output in input order");
  std::string batch_path;
  unsigned batch_threads = 0;
  batch->add_option("path", batch_path, "input file")->required();
  batch->add_option("--threads", batch_threads, "worker threads (0 = hardware)");

  auto* gen = app.add_subcommand("gen", "sample braids satisfying the family conditions");
  bv::GeneratorSpec spec;
  gen->add_option("--syllables", spec.syllable_count, "syllables per word")->capture_default_str();
  gen->add_option("--count", spec.count, "number of words")->capture_default_str();
  gen->add_option("--neg-min", spec.neg_min, "most negative exponent")->capture_default_str();
  gen->add_option("--pos-max", spec.pos_max, "largest positive exponent (0: none)")->capture_default_str();
  gen->add_option("--positive-rate", spec.positive_rate, "positive syllable rate")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "cross-check all identities on a family word");
  add_word(verify);
  auto* schreier = app.add_subcommand("schreier", "3-braid normal form and hyperbolicity");
  add_word(schreier);
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket by state sum");
  add_word(bracket);
  auto* state = app.add_subcommand("state", "all-A state circles and segments");
  add_word(state);
  std::string svg_path;
  state->add_option("--svg", svg_path, "write the state diagram as SVG");
  auto* check = app.add_subcommand("check", "family conditions report");
  add_word(check);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  if (*analyze) {
    return guarded([&] {
      auto o = options(g);
      o.require_jones = require_jones;
      const auto r = bv::analyze(join(word), g.n, o);
      if (g.json)
        std::cout << bv::to_json(r).dump(2) << '\n';
      else
        print_human(std::cout, r);
      return int{ok};
    });
  }
  if (*batch) return cmd_batch(batch_path, batch_threads, g);
  if (*gen) {
    return guarded([&] {
      spec.n = g.n.value_or(3);
      spec.seed = g.seed;
      const auto words = bv::generate_family(spec);
      if (g.json) {
        json arr = json::array();
        for (const auto& w : words) arr.push_back({{"word", bv::to_string(w)}, {"syllables", bv::to_json(w)}});
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& w : words) std::cout << bv::to_string(w) << '\n';
      }
      return int{ok};
    });
  }
  if (*verify) {
    return guarded([&] {
      const auto v = bv::verify_identities(read_word(word, g), g.max_crossings);
      if (g.json) {
        std::cout << bv::to_json(v).dump(2) << '\n';
      } else {
        for (const auto& c : v.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        std::cout << (v.all_pass() ? "all identities hold" : "identity failure") << '\n';
      }
      return int{v.all_pass() ? ok : identity_failure};
    });
  }
  if (*schreier) {
    return guarded([&] {
      const auto w = read_word(word, g);
      const auto f = bv::schreier_normal_form(w);
      const auto h = bv::is_hyperbolic_closure_3braid(w);
      if (g.json) {
        json j = bv::to_json(f);
        j["hyperbolicity"] = bv::to_json(h);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << bv::to_string(f) << "\nk=" << f.k << " s=" << f.s << " kind=" << bv::name(f.kind)
                  << (f.degenerate_eta ? " (degenerate eta)" : "") << "\nhyperbolic=" << h.hyperbolic << " ("
                  << h.reason << ")";
        if (h.witness) std::cout << " witness p=" << h.witness->first << " q=" << h.witness->second;
        std::cout << '\n';
      }
      return int{ok};
    });
  }
  if (*bracket) {
    return guarded([&] {
      const auto w = read_word(word, g);
      const auto b = bv::compute_bracket(w, bv::analyze_state(w), g.max_crossings);
      if (g.json) {
        std::cout << bv::to_json(b).dump(2) << '\n';
      } else {
        std::cout << b.polynomial.to_string() << '\n';
        std::cout << (b.summary ? bv::to_json(*b.summary).dump(2) : std::string("null")) << '\n';
      }
      return int{ok};
    });
  }
  if (*state) {
    return guarded([&] {
      const auto w = read_word(word, g);
      const auto st = bv::analyze_state(w);
      if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw bv::GateError("cannot write " + svg_path);
        out << bv::render_state_svg(st);
      }
      if (g.json) {
        json j = bv::to_json(st);
        j["word"] = bv::to_string(w);
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& c : st.circles) {
          std::cout << "circle " << c.id << ": " << bv::name(c.klass) << " winding=" << c.winding << " support={";
          for (std::size_t i = 0; i < c.support.size(); ++i) std::cout << (i ? "," : "") << c.support[i];
          std::cout << "} segments=" << c.segments.size() << '\n';
        }
        std::cout << st.segments.size() << " segments\n";
      }
      return int{ok};
    });
  }
  if (*check) {
    return guarded([&] {
      const auto w = read_word(word, g);
      const auto r = bv::check_main_lemma(w);
      if (g.json) {
        std::cout << bv::to_json(r).dump(2) << '\n';
      } else {
        std::cout << (r.pass ? "pass" : "fail") << ": nice=" << r.nice << " cond1=" << r.cond1
                  << " cond2_failures=" << r.cond2_failures.size() << " twist_ok=" << r.twist_ok << '\n';
        for (const auto& f : r.cond2_failures)
          std::cout << "  " << bv::name(f.clause) << " at syllable " << f.syllable << ": " << f.reason << '\n';
      }
      return int{ok};
    });
  }
  return usage;
}
