#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "tmirror/json_io.hpp"
#include "tmirror/lefschetz.hpp"
#include "tmirror/siegel.hpp"

namespace fs = std::filesystem;
using namespace tmirror;

namespace {

struct Options {
  int budget = 5;
  int n_max = 4;
};

struct Outcome {
  int code = 0;
  Json out;
};

class ParseFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void cap(int n, const Options& o) {
  if (n > o.n_max) throw SizeLimit("n = " + std::to_string(n) + " exceeds --n-max " + std::to_string(o.n_max));
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field ") + key + " must be an integer");
  return v.get<int>();
}

Json mirror_json(const WeakPair& pair, const MirrorCertificate& c) {
  return {{"pair", to_json(pair)}, {"certificate", to_json(c)}};
}

using Handler = std::function<Json(const Json&, const Options&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"make-torus",
       [](const Json& in, const Options& o) {
         Torus A = torus_from_json(in);
         cap(A.n, o);
         return Json{{"torus", to_json(A)}, {"dual", to_json(dual_torus(A))}};
       }},
      {"ns-basis",
       [](const Json& in, const Options& o) {
         Torus A = torus_from_json(in);
         cap(A.n, o);
         Json basis = Json::array();
         for (const auto& c : ns_basis(A)) basis.push_back(to_json(c.c));
         return Json{{"rank", basis.size()}, {"basis", basis}};
       }},
      {"classify",
       [](const Json& in, const Options& o) {
         WeakPair p = pair_from_json(in);
         cap(p.torus.n, o);
         return Json{{"tag", to_string(classify_pair(p))}};
       }},
      {"i-omega",
       [](const Json& in, const Options& o) {
         WeakPair p = pair_from_json(in);
         cap(p.torus.n, o);
         return Json{{"I", to_json(i_omega(p))}};
       }},
      {"mirror-split",
       [](const Json& in, const Options& o) {
         WeakPair p = pair_from_json(field(in, "pair"));
         cap(p.torus.n, o);
         MirrorResult r = mirror_from_splitting(p, splitting_from_json(field(in, "splitting")));
         return mirror_json(r.pair, r.cert);
       }},
      {"g-mirror",
       [](const Json& in, const Options& o) {
         WeakPair p = pair_from_json(field(in, "pair"));
         cap(p.torus.n, o);
         GMirrorResult r = g_mirror(p, witness_from_json(field(in, "witness")));
         Json out = mirror_json(r.pair, r.cert);
         out["witness"] = to_json(r.witness);
         return out;
       }},
      {"elliptic-mirror",
       [](const Json& in, const Options& o) {
         Torus A = torus_from_json(field(in, "torus"));
         cap(A.n, o);
         EllipticMirror m = elliptic_mirror(A, gauss_from_json(field(in, "tau")),
                                            int_matrix_from_json(field(in, "phi")), o.budget);
         Json deltas = Json::array(), isos = Json::array();
         for (const auto& d : m.deltas) deltas.push_back(to_json(d));
         for (const auto& f : m.isogenies) isos.push_back(to_json(f));
         Json out = mirror_json(m.pairB, m.cert);
         out["deltas"] = deltas;
         out["isogenies"] = isos;
         return out;
       }},
      {"verify-mirror",
       [](const Json& in, const Options& o) {
         MirrorCertificate c = certificate_from_json(in);
         cap(c.pairA.torus.n, o);
         verify_mirror(c.pairA, c.pairB, c.alpha);
         return Json{{"ok", true}};
       }},
      {"beta",
       [](const Json& in, const Options& o) {
         IsotropicSplitting s1 = splitting_from_json(field(in, "s1"));
         IsotropicSplitting s2 = splitting_from_json(field(in, "s2"));
         cap(static_cast<int>(s1.basis1.rows() / 4), o);
         RatMatrix T = beta_iso(s1, s2);
         return Json{{"beta", to_json(T)}, {"parity", to_string(beta_parity(T, s1, s2))}};
       }},
      {"xi",
       [](const Json& in, const Options& o) {
         const int n = int_field(in, "n");
         if (n < 1) throw SchemaError("n must be positive");
         cap(n, o);
         ProductClass xi = xi_from_mirror(n);
         RatMatrix v = correspondence_matrix(xi);
         return Json{{"xi", to_json(xi)}, {"matrix", to_json(v)}, {"equals_beta_explicit", v == beta_explicit(n)}};
       }},
      {"phi-p",
       [](const Json& in, const Options& o) {
         SpinVec v = spinvec_from_json(in);
         cap(v.n, o);
         return to_json(phi_poincare(v.n, v));
       }},
      {"gns",
       [](const Json& in, const Options& o) {
         Torus A = torus_from_json(in);
         cap(A.n, o);
         auto kappas = default_kappas(A, o.budget, 4);
         LieAlgebraBasis L = generate_g_ns(A, kappas);
         LieAlgebraBasis so = so_lambda_spinor_image(A);
         bool inside = true, chi = true;
         for (const auto& op : L.ops) {
           inside = inside && in_span(so, op.mat);
           chi = chi && preserves_chi(op.mat, A.n);
         }
         return Json{{"dim", L.dim}, {"kappas", kappas.size()}, {"in_so", inside}, {"preserves_chi", chi}};
       }},
      {"siegel-act",
       [](const Json& in, const Options& o) {
         WeakPair p = pair_from_json(field(in, "pair"));
         cap(p.torus.n, o);
         return to_json(siegel_act(rat_matrix_from_json(field(in, "g")), p));
       }},
      {"spin-check",
       [](const Json& in, const Options& o) {
         const int n = int_field(in, "n");
         cap(n, o);
         RatMatrix z = rat_matrix_from_json(field(in, "z"));
         if (z.rows() != spin_dim(n) || z.cols() != spin_dim(n)) throw SchemaError("z must be 2^{2n} square");
         if (!is_spin(z)) return Json{{"spin", false}};
         return Json{{"spin", true}, {"r", to_json(r_of_z(z))}};
       }},
  };
  return h;
}

Outcome run_job(const std::string& command, const std::string& text, const Options& o) {
  auto it = handlers().find(command);
  if (it == handlers().end()) return {2, {{"error", "UnknownCommand"}, {"message", command}}};
  try {
    Json in = Json::parse(text);
    return {0, it->second(in, o)};
  } catch (const DomainError& e) {
    return {1, {{"error", e.kind()}, {"message", e.what()}}};
  } catch (const SchemaError& e) {
    return {2, {{"error", "SchemaError"}, {"message", e.what()}}};
  } catch (const Json::exception& e) {
    return {2, {{"error", "ParseError"}, {"message", e.what()}}};
  }
}

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseFailure("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& s) {
  if (path.empty() || path == "-") {
    std::cout << s << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << s << '\n';
}

// Fixture: {"command", "input" | "input_raw", "expect_exit", "expect_output"?}.
int run_fixtures(const std::string& dir, const Options& o) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int failed = 0;
  for (const auto& path : files) {
    std::string why;
    try {
      Json fx = Json::parse(read_text(path.string()));
      const std::string text = fx.contains("input_raw") ? fx["input_raw"].get<std::string>() : fx.at("input").dump();
      Outcome r = run_job(fx.at("command").get<std::string>(), text, o);
      const int want = fx.value("expect_exit", 0);
      if (r.code != want)
        why = "exit " + std::to_string(r.code) + ", expected " + std::to_string(want) + ": " + r.out.dump();
      else if (fx.contains("expect_output") && r.out != fx["expect_output"])
        why = "output " + r.out.dump();
      else if (r.code == 0 && Json::parse(r.out.dump()).dump() != r.out.dump())
        why = "output does not round-trip";
    } catch (const std::exception& e) {
      why = std::string("bad fixture: ") + e.what();
    }
    std::cout << (why.empty() ? "PASS " : "FAIL ") << path.filename().string();
    if (!why.empty()) std::cout << "  " << why;
    std::cout << '\n';
    failed += !why.empty();
  }
  std::cout << files.size() - failed << "/" << files.size() << " fixtures passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mirror-symmetry constructions for complex tori"};
  app.require_subcommand(1);
  Options o;
  std::string input, output;
  app.add_option("--budget", o.budget, "Search budget")->capture_default_str();
  app.add_option("--n-max", o.n_max, "Largest accepted complex dimension")->capture_default_str();
  for (const auto& [name, _] : handlers()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input,-i", input, "Input JSON file (default stdin)");
    sub->add_option("--output,-o", output, "Output JSON file (default stdout)");
  }
  CLI::App* fx = app.add_subcommand("run-fixtures", "Run a directory of JSON fixtures");
  fx->add_option("--input,-i", input, "Fixture directory")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub == fx) return run_fixtures(input, o);
    Outcome r = run_job(sub->get_name(), read_text(input), o);
    write_text(output, r.out.dump());
    if (r.code) std::cerr << r.out.value("error", "") << ": " << r.out.value("message", "") << '\n';
    return r.code;
  } catch (const ParseFailure& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
