// Command line front end. Exit codes: 0 success, 1 domain error, 2 usage error.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rank2sg/io.hpp"

using namespace rank2sg;

namespace {

struct Options {
  std::string theta_file;
  std::string fixture;
  std::string rep_file;
  std::string rep2_file;
  std::string graph_file;
  std::string out;
  std::string dot;
  std::string json;
  std::string word, w1, w2, u, v, pattern;
  std::string pre, per, e_pre, e_per, f_pre, f_per;
  std::string start, cycle;
  std::string alpha = "0", beta = "0";
  std::string window;
  int k = 1, l = 1;
  int kmax = 2, lmax = 2;
  std::uint64_t cap = 1000000;
  int depth = 3;
  std::optional<std::uint64_t> seed;
  int max_vertices = 200000;
  int width = 4, height = 4;
  int m = 2, n = 2;
  bool swap = false;
  bool verbose = false;
  int iso_cap = 8;
  std::int64_t target = 7;
  int max_len = 12;
  int jobs = 1;
  std::int64_t sample_q = 0;
  std::string write_dir;
};

Theta get_theta(const Options& o) {
  if (!o.theta_file.empty()) return load_theta(o.theta_file);
  if (!o.fixture.empty()) return builtin_theta(o.fixture);
  throw CLI::ValidationError("--theta", "a theta file (--theta) or built-in fixture (--fixture) is required");
}

std::optional<Theta> maybe_theta(const Options& o) {
  if (o.theta_file.empty() && o.fixture.empty()) return std::nullopt;
  return get_theta(o);
}

Rep load_rep(const Options& o, const std::string& path) {
  Json j = read_json_file(path);
  auto th = maybe_theta(o);
  return rep_from_json(j, th ? &*th : nullptr);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

std::pair<int, int> parse_pair(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw CLI::ValidationError("pair", "expected i,j");
  return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
}

std::vector<std::pair<int, int>> parse_cycle(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_pair(item));
  return out;
}

Word mixed_or(const std::string& s, Color c) {
  if (s.find('e') != std::string::npos || s.find('f') != std::string::npos) return parse_word(s);
  return c == Color::Blue ? parse_blue(s) : parse_red(s);
}

std::string symmetry_text(const SymmetryGroup& g, const Sublattice& kernel) {
  std::ostringstream os;
  os << "H = " << g.lattice.str() << "\n";
  os << "K = " << kernel.str() << "\n";
  if (g.lattice.rank() == 2) os << "index = " << g.lattice.index() << "\n";
  os << "exact = " << (g.exact ? "true" : "false") << "\n";
  if (!g.exact) os << "bound = " << g.bound << "\n";
  os << "irreducible = " << (g.lattice == kernel ? "true" : "false") << "\n";
  return os.str();
}

std::string character_text(const CharacterOnSublattice& c) {
  std::ostringstream os;
  for (std::size_t a = 0; a < c.values.size(); ++a) {
    if (a) os << " ";
    os << to_string(c.domain.basis()[a]) << "->" << c.values[a].str();
  }
  return os.str();
}

RepGraph input_graph(const Options& o) {
  if (!o.graph_file.empty()) return graph_from_json(read_json_file(o.graph_file));
  if (o.rep_file.empty()) throw CLI::ValidationError("--rep", "a rep (--rep) or graph (--graph) file is required");
  Rep rep = load_rep(o, o.rep_file);
  std::optional<Rect> win;
  if (!o.window.empty()) {
    Rect r;
    char c;
    std::stringstream ss(o.window);
    if (!(ss >> r.s_lo >> c >> r.s_hi >> c >> r.t_lo >> c >> r.t_hi))
      throw CLI::ValidationError("--window", "expected s_lo,s_hi,t_lo,t_hi");
    win = r;
  }
  return graph_of(rep, win);
}

void write_graph_outputs(const Options& o, const RepGraph& g, const std::string& title) {
  if (!o.dot.empty()) write_text_file(o.dot, to_dot(g, title));
  if (!o.json.empty()) write_text_file(o.json, graph_to_json(g).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with rank-2 semigroups and their atomic representations"};
  app.require_subcommand(1);
  Options o;

  auto theta_opts = [&](CLI::App* sub) {
    sub->add_option("--theta", o.theta_file, "theta TOML file");
    sub->add_option("--fixture", o.fixture, "built-in theta (forward3, reverse3, flip, identity22, swap33, twocycles33)");
  };
  auto rep_opts = [&](CLI::App* sub) {
    theta_opts(sub);
    sub->add_option("--rep", o.rep_file, "rep JSON file")->required();
  };

  auto* normalize = app.add_subcommand("normalize", "rewrite a word into e-first form or a given color pattern");
  theta_opts(normalize);
  normalize->add_option("--word", o.word, "word such as e1.f2.e2")->required();
  normalize->add_option("--pattern", o.pattern, "color pattern such as ffe");

  auto* mult = app.add_subcommand("multiply", "product of two words in normal form");
  theta_opts(mult);
  mult->add_option("--w1", o.w1)->required();
  mult->add_option("--w2", o.w2)->required();

  auto* commute = app.add_subcommand("commute", "does e_u f_v equal f_v e_u");
  theta_opts(commute);
  commute->add_option("--u", o.u, "blue word (digits)")->required();
  commute->add_option("--v", o.v, "red word (digits)")->required();

  auto* tp = app.add_subcommand("theta-prime", "the induced permutation on word pairs");
  tp->require_subcommand(1);
  auto* tp_apply = tp->add_subcommand("apply", "e_u f_v = f_v' e_u'");
  auto* tp_cycle = tp->add_subcommand("cycle", "orbit of (u, v)");
  for (auto* s : {tp_apply, tp_cycle}) {
    theta_opts(s);
    s->add_option("--u", o.u)->required();
    s->add_option("--v", o.v)->required();
  }
  auto* tp_survey = tp->add_subcommand("survey", "cycle type for all degrees up to (kmax, lmax)");
  theta_opts(tp_survey);
  tp_survey->add_option("--kmax", o.kmax)->check(CLI::PositiveNumber);
  tp_survey->add_option("--lmax", o.lmax)->check(CLI::PositiveNumber);
  tp_survey->add_option("--cap", o.cap, "largest table size")->check(CLI::PositiveNumber);

  auto* rep = app.add_subcommand("rep", "build a group-construction rep (JSON on stdout or --out)");
  rep->require_subcommand(1);
  auto* rep_cycle = rep->add_subcommand("cycle", "rep on C_k from a theta cycle");
  rep_cycle->add_option("--start", o.start, "a pair i,j on the cycle");
  rep_cycle->add_option("--cycle", o.cycle, "explicit cycle i,j;i,j;...");
  auto* rep_pair = rep->add_subcommand("pair", "ring by ring rep from a commuting pair");
  rep_pair->add_option("--u", o.u)->required();
  rep_pair->add_option("--v", o.v)->required();
  auto* rep_rt = rep->add_subcommand("ring-tail", "ring by tail window");
  rep_rt->add_option("--u", o.u)->required();
  rep_rt->add_option("--pre", o.pre, "red tail preperiod");
  rep_rt->add_option("--per", o.per, "red tail period")->required();
  auto* rep_3a = rep->add_subcommand("3a", "Sigma window of an alternating tail");
  rep_3a->add_option("--pre", o.pre, "preperiod, e.g. e1.f2");
  rep_3a->add_option("--per", o.per, "period, e.g. e1.f1.e2.f1")->required();
  rep_3a->add_option("--width", o.width)->check(CLI::NonNegativeNumber);
  rep_3a->add_option("--height", o.height)->check(CLI::NonNegativeNumber);
  auto* rep_3bi = rep->add_subcommand("3bi", "unfold the theta' cycle of (u, v)");
  rep_3bi->add_option("--u", o.u)->required();
  rep_3bi->add_option("--v", o.v)->required();
  auto* rep_3bii = rep->add_subcommand("3bii", "block tails with (k, -l) periodicity");
  rep_3bii->add_option("--e-pre", o.e_pre);
  rep_3bii->add_option("--e-per", o.e_per)->required();
  rep_3bii->add_option("--f-pre", o.f_pre);
  rep_3bii->add_option("--f-per", o.f_per)->required();
  rep_3bii->add_option("--k", o.k)->check(CLI::PositiveNumber);
  rep_3bii->add_option("--l", o.l)->check(CLI::PositiveNumber);
  for (auto* s : {rep_cycle, rep_pair, rep_rt, rep_3a, rep_3bi, rep_3bii}) {
    theta_opts(s);
    s->add_option("--alpha", o.alpha, "blue scalar angle p/q");
    s->add_option("--beta", o.beta, "red scalar angle p/q");
    s->add_option("--out", o.out);
  }

  auto* validate = app.add_subcommand("validate", "check the cell relations of a rep");
  rep_opts(validate);
  auto* symmetry = app.add_subcommand("symmetry", "symmetry lattice H of a rep");
  rep_opts(symmetry);
  auto* psi = app.add_subcommand("psi", "scalar character on the kernel");
  rep_opts(psi);
  auto* nscal = app.add_subcommand("normalize-scalars", "gauge the scalars to constants");
  rep_opts(nscal);
  nscal->add_option("--out", o.out);
  auto* decomp = app.add_subcommand("decompose", "split a rep along its symmetry");
  rep_opts(decomp);
  decomp->add_option("--sample", o.sample_q, "for infinite H/K: list characters with denominator q");
  auto* equiv = app.add_subcommand("equivalent", "unitary equivalence of two finite reps");
  rep_opts(equiv);
  equiv->add_option("--rep2", o.rep2_file)->required();

  auto* dil = app.add_subcommand("dilate", "minimal isometric defect-free extension by diamond completion");
  theta_opts(dil);
  dil->add_option("--rep", o.rep_file);
  dil->add_option("--graph", o.graph_file, "graph JSON instead of a rep");
  dil->add_option("--window", o.window, "s_lo,s_hi,t_lo,t_hi for infinite reps");
  dil->add_option("--depth", o.depth)->check(CLI::NonNegativeNumber);
  dil->add_option("--seed", o.seed, "shuffle the completion order");
  dil->add_option("--max-vertices", o.max_vertices)->check(CLI::PositiveNumber);
  dil->add_option("--dot", o.dot);
  dil->add_option("--json", o.json);

  auto* cls = app.add_subcommand("classify", "ring/tail type of each color");
  theta_opts(cls);
  cls->add_option("--rep", o.rep_file);
  cls->add_option("--graph", o.graph_file);
  cls->add_option("--window", o.window);

  auto* exp = app.add_subcommand("export", "write the graph of a rep as DOT and/or JSON");
  theta_opts(exp);
  exp->add_option("--rep", o.rep_file);
  exp->add_option("--graph", o.graph_file);
  exp->add_option("--window", o.window);
  exp->add_option("--dot", o.dot);
  exp->add_option("--json", o.json);

  auto* iso = app.add_subcommand("iso-classes", "isomorphism classes of m x n semigroups");
  iso->add_option("--m", o.m)->check(CLI::PositiveNumber);
  iso->add_option("--n", o.n)->check(CLI::PositiveNumber);
  iso->add_flag("--swap", o.swap, "also allow exchanging e and f (m == n)");
  iso->add_option("--cap", o.iso_cap, "largest m*n")->check(CLI::Range(1, 10));
  iso->add_flag("--verbose", o.verbose, "list a representative per class");
  iso->add_option("--json", o.json, "write the report as JSON");

  auto* fp = app.add_subcommand("find-pair", "long commuting pair with certified dimension");
  theta_opts(fp);
  fp->add_option("--target", o.target)->check(CLI::PositiveNumber);
  fp->add_option("--max-len", o.max_len, "largest block length")->check(CLI::PositiveNumber);
  fp->add_option("--json", o.json);

  auto* ap = app.add_subcommand("aperiodic-search", "alternating tail whose Sigma window has no symmetry");
  theta_opts(ap);
  ap->add_option("--max-len", o.max_len, "tail length in letters")->check(CLI::PositiveNumber);
  ap->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  ap->add_option("--json", o.json);

  auto* fix = app.add_subcommand("fixtures", "list or write the built-in thetas");
  fix->add_option("--write", o.write_dir, "directory to write into");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize) {
      Theta th = get_theta(o);
      Word w = parse_word(o.word);
      Word r = o.pattern.empty() ? normal_form(th, w) : refactor(th, w, parse_pattern(o.pattern));
      std::cout << format_word(r) << "\n";
    } else if (*mult) {
      Theta th = get_theta(o);
      std::cout << format_word(multiply(th, parse_word(o.w1), parse_word(o.w2))) << "\n";
    } else if (*commute) {
      Theta th = get_theta(o);
      std::cout << (commutes(th, mixed_or(o.u, Color::Blue), mixed_or(o.v, Color::Red)) ? "true" : "false") << "\n";
    } else if (*tp_apply) {
      Theta th = get_theta(o);
      auto [u2, v2] = theta_prime_apply(th, parse_blue(o.u), parse_red(o.v));
      std::cout << format_indices(u2) << " " << format_indices(v2) << "\n";
    } else if (*tp_cycle) {
      Theta th = get_theta(o);
      auto cyc = theta_prime_cycle(th, parse_blue(o.u), parse_red(o.v));
      for (const auto& [u2, v2] : cyc) std::cout << format_indices(u2) << " " << format_indices(v2) << "\n";
      std::cout << "length " << cyc.size() << "\n";
    } else if (*tp_survey) {
      Theta th = get_theta(o);
      for (const auto& row : theta_prime_survey(th, o.kmax, o.lmax, o.cap)) {
        std::cout << "k=" << row.k << " l=" << row.l << " size=" << row.size << " cycles:";
        for (const auto& [len, cnt] : row.cycles) std::cout << " " << len << "^" << cnt;
        std::cout << "\n";
      }
    } else if (*rep) {
      Theta th = get_theta(o);
      RationalAngle a = RationalAngle::parse(o.alpha), b = RationalAngle::parse(o.beta);
      Rep r;
      if (*rep_cycle) {
        std::vector<std::pair<int, int>> cyc;
        if (!o.cycle.empty()) {
          cyc = parse_cycle(o.cycle);
        } else {
          auto p = o.start.empty() ? std::pair<int, int>{1, 1} : parse_pair(o.start);
          for (const auto& c : th.cycles())
            if (std::find(c.begin(), c.end(), p) != c.end()) cyc = c;
        }
        r = from_theta_cycle(th, cyc, a, b);
      } else if (*rep_pair) {
        r = from_commuting_pair(th, parse_blue(o.u), parse_red(o.v), a, b);
      } else if (*rep_rt) {
        r = build_ring_by_tail(th, parse_blue(o.u), TailSpec{parse_red(o.pre), parse_red(o.per)}, a);
      } else if (*rep_3a) {
        TailSpec tau{parse_word(o.pre), parse_word(o.per)};
        r = sigma_to_rep(th, build_inductive_window(th, tau, o.width, o.height));
      } else if (*rep_3bi) {
        r = build_3bi(th, parse_blue(o.u), parse_red(o.v), b);
      } else {
        r = build_3bii(th, TailSpec{parse_blue(o.e_pre), parse_blue(o.e_per)},
                       TailSpec{parse_red(o.f_pre), parse_red(o.f_per)}, o.k, o.l, b);
      }
      emit(o, rep_to_json(r).dump(2) + "\n");
    } else if (*validate) {
      Json j = read_json_file(o.rep_file);
      auto th = maybe_theta(o);
      Rep r;
      try {
        r = rep_from_json(j, th ? &*th : nullptr);
      } catch (const DomainError& e) {
        std::cout << "invalid " << e.code() << ": " << e.what() << "\n";
        return 1;
      }
      std::cout << "ok\n";
    } else if (*symmetry) {
      Rep r = load_rep(o, o.rep_file);
      std::cout << symmetry_text(symmetry_group(r), r.kernel);
    } else if (*psi) {
      Rep r = load_rep(o, o.rep_file);
      auto c = scalar_character(r);
      std::cout << "K = " << r.kernel.str() << "\n";
      std::cout << "psi: " << character_text(c) << "\n";
    } else if (*nscal) {
      Rep r = load_rep(o, o.rep_file);
      auto nr = normalize_scalars(r);
      if (o.out.empty()) {
        std::cout << "alpha = " << nr.alpha0.str() << "\nbeta = " << nr.beta0.str() << "\n";
      } else {
        write_text_file(o.out, rep_to_json(nr.rep).dump(2) + "\n");
      }
    } else if (*decomp) {
      Rep r = load_rep(o, o.rep_file);
      if (!r.constant_scalars()) r = normalize_scalars(r).rep;
      auto d = decompose(r);
      std::cout << "H = " << d.H.str() << "\n";
      std::cout << "K = " << r.kernel.str() << "\n";
      std::cout << d.descriptor << "\n";
      auto print = [&](const std::vector<Summand>& ss) {
        std::cout << "summands = " << ss.size() << "\n";
        for (const auto& s : ss)
          std::cout << "  chi: " << character_text(s.chi) << "  psi: " << character_text(s.psi)
                    << "  dim: " << s.rep.size() << "\n";
      };
      if (d.finite) print(d.summands);
      else if (o.sample_q > 0) print(d.sample(o.sample_q));
    } else if (*equiv) {
      Rep a = load_rep(o, o.rep_file), b = load_rep(o, o.rep2_file);
      std::cout << (equivalent_reps(a, b) ? "true" : "false") << "\n";
    } else if (*dil) {
      Theta th = get_theta(o);
      RepGraph g = input_graph(o);
      auto res = dilate(th, g, {o.depth, o.seed, o.max_vertices});
      write_graph_outputs(o, res.graph, "dilation");
      int frontier = static_cast<int>(std::count(res.graph.frontier.begin(), res.graph.frontier.end(), true));
      std::cout << "vertices " << res.graph.size() << "\nedges " << res.graph.edges.size() << "\nfrontier "
                << frontier << "\n";
    } else if (*cls) {
      RepGraph g = input_graph(o);
      auto verdict = classify(g);
      auto kind = [](const ColorSummary& c) {
        switch (c.kind) {
          case ComponentKind::Ring: return "ring(" + std::to_string(c.ring_length) + ")";
          case ComponentKind::Tail: return std::string("tail");
          default: return std::string("undetermined");
        }
      };
      std::cout << "blue " << kind(verdict.blue) << "\nred " << kind(verdict.red) << "\ntype " << verdict.type << "\n";
      if (verdict.period) std::cout << "period " << to_string(*verdict.period) << "\n";
    } else if (*exp) {
      RepGraph g = input_graph(o);
      if (o.dot.empty() && o.json.empty()) std::cout << to_dot(g, "rep");
      write_graph_outputs(o, g, "rep");
    } else if (*iso) {
      auto r = iso_classes(o.m, o.n, o.swap, o.iso_cap);
      std::cout << r.count() << "\n";
      if (o.verbose)
        for (std::size_t a = 0; a < r.count(); ++a) {
          std::cout << "class " << a + 1 << " (orbit " << r.orbit_sizes[a] << "):";
          for (const auto& rel : r.representatives[a].relations())
            std::cout << " " << rel[0] << rel[1] << "->" << rel[2] << rel[3];
          std::cout << "\n";
        }
      if (!o.json.empty()) {
        Json j{{"m", r.m}, {"n", r.n}, {"swap", r.swap}, {"total", r.total}, {"classes", Json::array()}};
        for (std::size_t a = 0; a < r.count(); ++a)
          j["classes"].push_back({{"orbit", r.orbit_sizes[a]}, {"theta", theta_to_json(r.representatives[a])}});
        write_text_file(o.json, j.dump(2) + "\n");
      }
    } else if (*fp) {
      Theta th = get_theta(o);
      auto r = find_commuting_pair(th, o.target, o.max_len);
      std::cout << "u " << format_indices(r.u) << "\nv " << format_indices(r.v) << "\nblock " << r.block_len
                << "\ncycle " << r.cycle << "\ndimension " << r.dimension << "\nH " << r.symmetry.str() << "\n";
      if (!o.json.empty())
        write_text_file(o.json, Json{{"u", format_indices(r.u)},
                                     {"v", format_indices(r.v)},
                                     {"block", r.block_len},
                                     {"cycle", r.cycle},
                                     {"dimension", r.dimension},
                                     {"H", r.symmetry.str()}}
                                        .dump(2) +
                                    "\n");
    } else if (*ap) {
      Theta th = get_theta(o);
      auto w = aperiodic_search(th, o.max_len, o.jobs);
      if (w)
        std::cout << "witness " << format_word(w->tail.period) << "\nwindow " << w->window.width << "x"
                  << w->window.height << "\n";
      else
        std::cout << "none within " << o.max_len << "\n";
      if (!o.json.empty()) {
        Json j{{"max_len", o.max_len}, {"witness", nullptr}};
        if (w) j["witness"] = tail_to_json(w->tail);
        write_text_file(o.json, j.dump(2) + "\n");
      }
    } else if (*fix) {
      if (o.write_dir.empty()) {
        for (const auto& f : builtin_fixtures()) std::cout << f.name << "  " << f.comment << "\n";
      } else {
        std::filesystem::create_directories(o.write_dir);
        for (const auto& f : builtin_fixtures())
          write_text_file(o.write_dir + "/" + f.name + ".toml", theta_to_toml(f.theta, f.comment));
        write_text_file(o.write_dir + "/fixedpoint22.json", rep_to_json(fixed_point_rep(), false).dump(2) + "\n");
        std::cout << "wrote " << builtin_fixtures().size() + 1 << " files to " << o.write_dir << "\n";
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
