// diacat: command-line front end for the diagram library.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diacat.hpp"
#include "diacat/io.hpp"

namespace {

using namespace diacat;
using Json = io::Json;

struct Options {
  std::string preset = "S";
  std::optional<int> r;
  std::vector<std::string> assign;
  std::optional<int> m;
  int p = 0;
  int degree = kDefaultDegree;
  std::optional<int> n;
  std::string format = "text";
  std::string expr;
  std::string matrix;
  std::string lambda;
  std::string mu;
  std::string tableau;
  std::string file;
  bool table = false;
  bool left  = false;
  std::vector<std::size_t> pair;
};

struct Output {
  std::string text;
  Json json;
};

std::map<std::string, Rational> assignments(Options const& o, ParamSet const& ps) {
  std::map<std::string, Rational> out;
  for (auto const& a : o.assign) {
    auto eq = a.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::invalid_argument, "expected name=value, got '" + a + "'");
    }
    std::string name = a.substr(0, eq);
    if (!ps.index_of(name)) {
      throw Error(ErrorCode::param_mismatch, "preset has no parameter '" + name + "'");
    }
    out[name] = parse_rational(a.substr(eq + 1));
  }
  return out;
}

std::string read_input(std::string const& arg, std::string const& file) {
  if (!arg.empty()) return arg;
  std::string text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  return text;
}

int need_n(Options const& o) {
  if (!o.n) throw Error(ErrorCode::missing_parameter, "this command needs -n");
  if (*o.n < 0) throw Error(ErrorCode::invalid_argument, "n must be >= 0");
  return *o.n;
}

std::optional<int> degree_for(Presentation const& p, Options const& o) {
  if (p.strategy() == Strategy::DAHA || p.strategy() == Strategy::AWREATH) {
    return o.degree;
  }
  return std::nullopt;
}

ModelAssignment model_for(Presentation const& p, Options const& o) {
  if (!o.m) throw Error(ErrorCode::missing_parameter, "evaluation needs -m");
  switch (p.strategy()) {
    case Strategy::SYM: return model_sym(*o.m);
    case Strategy::DAHA: return model_daha(*o.m, o.p);
    case Strategy::TL: return model_tl(*o.m);
    case Strategy::OB: return model_ob(*o.m);
    default:
      throw Error(ErrorCode::unsupported_hom,
                  "no evaluation model for preset " + p.id());
  }
}

Json matrix_entries(Matrix const& m) { return io::to_json(m); }

std::string join_lines(std::vector<std::string> const& lines) {
  std::string s;
  for (auto const& l : lines) s += l + "\n";
  return s;
}

Output run_normalize(Options const& o) {
  auto p  = preset(o.preset, o.r);
  auto in = read_input(o.expr, o.file);
  auto lc = normalize(p, p.expr(in));
  auto values = assignments(o, p.params());
  if (!values.empty()) lc = normalize(p, lc_substitute(lc, values));
  return {render(lc) + "\n",
          {{"command", "normalize"}, {"preset", p.id()}, {"input", in},
           {"result", io::to_json(lc)}}};
}

Output run_basis(Options const& o) {
  auto p = preset(o.preset, o.r);
  int n  = need_n(o);
  auto d = degree_for(p, o);
  auto b = basis(p, n, d);
  std::vector<std::string> lines;
  for (auto const& e : b) lines.push_back(to_text(e));
  Json j = {{"command", "basis"}, {"preset", p.id()}, {"n", n}};
  if (d) j["degree"] = *d;
  j["dim"]   = b.size();
  j["basis"] = lines;
  return {join_lines(lines), j};
}

Output run_dim(Options const& o) {
  auto p = preset(o.preset, o.r);
  int n  = need_n(o);
  auto d = degree_for(p, o);
  auto k = hom_dim(p, n, d);
  Json j = {{"command", "dim"}, {"preset", p.id()}, {"n", n}};
  if (d) j["degree"] = *d;
  j["dim"] = k;
  return {std::to_string(k) + "\n", j};
}

Output run_multiply(Options const& o) {
  auto p = preset(o.preset, o.r);
  int n  = need_n(o);
  if (o.table) {
    auto t = structure_table(p, n);
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
      lines.push_back("b" + std::to_string(i) + " = " + to_text(t.basis[i]));
    }
    for (std::size_t i = 0; i < t.table.size(); ++i) {
      for (std::size_t j = 0; j < t.table[i].size(); ++j) {
        std::string line = "b" + std::to_string(i) + " b" + std::to_string(j) + " =";
        if (t.table[i][j].empty()) line += " 0";
        bool first = true;
        for (auto const& [k, c] : t.table[i][j]) {
          line += (first ? " {" : " + {") + c.to_text() + "} b" + std::to_string(k);
          first = false;
        }
        lines.push_back(line);
      }
    }
    return {join_lines(lines), {{"command", "multiply"}, {"table", io::to_json(t)}}};
  }
  if (o.pair.size() != 2) {
    throw Error(ErrorCode::missing_parameter, "multiply needs I J or --table");
  }
  auto b = basis(p, n, degree_for(p, o));
  for (auto i : o.pair) {
    if (i >= b.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "basis index " + std::to_string(i) + " out of range");
    }
  }
  auto lc = multiply(p, b[o.pair[0]], b[o.pair[1]]);
  return {render(lc) + "\n",
          {{"command", "multiply"}, {"preset", p.id()}, {"n", n},
           {"i", o.pair[0]}, {"j", o.pair[1]}, {"result", io::to_json(lc)}}};
}

Output run_eval(Options const& o) {
  auto p     = preset(o.preset, o.r);
  auto model = model_for(p, o);
  for (auto const& [k, v] : assignments(o, p.params())) model.param_values[k] = v;
  auto in    = read_input(o.expr, o.file);
  auto lc    = p.expr(in);
  auto mat   = eval(model, lc);
  Json j = {{"command", "eval"}, {"preset", p.id()}, {"m", *o.m}, {"p", o.p},
            {"input", in}, {"dom", lc.dom().to_text()}, {"cod", lc.cod().to_text()},
            {"matrix", matrix_entries(mat)}};
  if (mat.rows() == 1 && mat.cols() == 1) {
    j["scalar"] = mat(0, 0).get_str();
    return {mat(0, 0).get_str() + "\n", j};
  }
  return {mat.to_text() + "\n", j};
}

Matrix input_matrix(Options const& o) {
  auto f = Matrix::parse(read_input(o.matrix, o.file));
  if (!f.is_square()) {
    throw Error(ErrorCode::shape_mismatch, "expected a square matrix, got " + f.shape());
  }
  if (o.m && std::size_t(*o.m) != f.rows()) {
    throw Error(ErrorCode::shape_mismatch, "matrix size differs from -m");
  }
  return f;
}

Output run_mate(Options const& o) {
  auto f     = input_matrix(o);
  auto model = model_ob(int(f.rows()));
  auto mate  = o.left ? left_mate(model, f) : right_mate(model, f);
  return {mate.to_text() + "\n",
          {{"command", "mate"}, {"m", f.rows()}, {"side", o.left ? "left" : "right"},
           {"matrix", matrix_entries(mate)}}};
}

Output run_trace(Options const& o) {
  auto f      = input_matrix(o);
  auto bubble = bubble_trace(model_ob(int(f.rows())), f);
  auto tr     = trace_vect(f);
  return {bubble.get_str() + "\n",
          {{"command", "trace"}, {"m", f.rows()}, {"trace", tr.get_str()},
           {"bubble", bubble.get_str()}}};
}

Partition need_lambda(std::string const& text) {
  if (text.empty()) throw Error(ErrorCode::missing_parameter, "needs --lambda");
  return parse_partition(text);
}

Json element_json(GroupAlgebraElem const& e) {
  Json terms = Json::array();
  for (auto const& [perm, c] : e.terms()) {
    terms.push_back({{"perm", perm.to_text()}, {"coeff", c.get_str()}});
  }
  return terms;
}

Output run_young(Options const& o) {
  auto l  = need_lambda(o.lambda);
  auto t  = o.tableau.empty() ? row_reading_tableau(l) : parse_tableau(o.tableau);
  auto e  = young_idempotent(l, t);
  Json j  = io::young_report(l, e);
  j["tableau"]    = tableau_text(t);
  j["idempotent"] = element_json(e);
  Json head = {{"command", "young"}};
  head.update(j);
  j = std::move(head);
  std::vector<std::string> lines = {
      "lambda " + partition_text(l),
      "tableau " + tableau_text(t),
      "f_hook " + std::to_string(hook_length_dim(l)),
      "rank " + std::to_string(j["rank"].get<std::size_t>()),
      std::string("idempotent_ok ") + (j["idempotent_ok"].get<bool>() ? "true" : "false"),
      "e = " + e.to_text()};
  return {join_lines(lines), j};
}

Output run_rank(Options const& o) {
  auto l = need_lambda(o.lambda);
  if (!o.mu.empty()) {
    auto mu   = parse_partition(o.mu);
    int total = partition_size(l) + partition_size(mu);
    if (total > 6) throw Error(ErrorCode::invalid_argument, "needs m + n <= 6");
    auto k = induced_product_dim(l, mu);
    return {std::to_string(k) + "\n",
            {{"command", "rank"}, {"lambda", partition_text(l)},
             {"mu", partition_text(mu)}, {"rank", k}}};
  }
  if (partition_size(l) > 6) throw Error(ErrorCode::invalid_argument, "needs n <= 6");
  auto t = o.tableau.empty() ? row_reading_tableau(l) : parse_tableau(o.tableau);
  auto k = ideal_rank(young_idempotent(l, t));
  return {std::to_string(k) + "\n",
          {{"command", "rank"}, {"lambda", partition_text(l)}, {"rank", k}}};
}

Output run_karoubi(Options const& o) {
  auto l = need_lambda(o.lambda);
  int n  = partition_size(l);
  if (n > 5) throw Error(ErrorCode::invalid_argument, "needs n <= 5");
  auto t = o.tableau.empty() ? row_reading_tableau(l) : parse_tableau(o.tableau);
  Karoubi<SymCategory> kar;
  auto x   = kar.object(n, young_idempotent(l, t));
  auto id  = kar.identity(x);
  bool id_ok = id.f == x.idem && kar.compose(id, id).f == x.idem;
  auto end_dim = kar.hom_dim(x, x);
  auto one = kar.embed(n);
  bool embed_ok = kar.hom_dim(one, one) == std::size_t(factorial(n));
  std::vector<std::string> lines = {
      "object (^" + std::to_string(n) + ", e_" + partition_text(l) + ")",
      "idempotent_ok true",
      std::string("identity_ok ") + (id_ok ? "true" : "false"),
      "end_dim " + std::to_string(end_dim),
      std::string("embed_ok ") + (embed_ok ? "true" : "false")};
  return {join_lines(lines),
          {{"command", "karoubi-check"}, {"lambda", partition_text(l)}, {"n", n},
           {"idempotent_ok", true}, {"identity_ok", id_ok}, {"end_dim", end_dim},
           {"embed_ok", embed_ok}}};
}

std::string element_text(FrobeniusData const& f, AlgebraElement const& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "{" + a[i].get_str() + "} " + f.basis[i];
  }
  return s.empty() ? "0" : s;
}

Output run_frobenius(Options const& o) {
  FrobeniusData f;
  if (o.r) {
    f = FrobeniusData::cyclic_group(*o.r);
  } else {
    auto text = read_input(o.expr, o.file);
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(e.byte, std::string("frobenius JSON: ") + e.what());
    }
    f = io::frobenius_from_json(doc);
  }
  validate_frobenius(f);
  std::vector<std::string> lines = {"dim " + std::to_string(f.dim())};
  Json teleport = Json::array();
  bool all = true;
  for (std::size_t b = 0; b < f.dim(); ++b) {
    lines.push_back("dual(" + f.basis[b] + ") = " + element_text(f, f.dual_basis[b]));
  }
  for (std::size_t b = 0; b < f.dim(); ++b) {
    bool ok = teleport_check(f, f.basis_element(b));
    all = all && ok;
    teleport.push_back(ok);
    lines.push_back("teleport(" + f.basis[b] + ") " + (ok ? "true" : "false"));
  }
  lines.push_back(std::string("ok ") + (all ? "true" : "false"));
  return {join_lines(lines),
          {{"command", "frobenius-check"}, {"frobenius", io::to_json(f)},
           {"teleport", teleport}, {"ok", all}}};
}

Output run_presentation(Options const& o) {
  auto p = preset(o.preset, o.r);
  std::vector<std::string> lines = {p.id() + " (" + to_string(p.strategy()) + ")"};
  for (auto const& rel : p.relations()) {
    lines.push_back(rel.name + ": " + render(rel.lhs) + " = " + render(rel.rhs));
  }
  return {join_lines(lines),
          {{"command", "presentation"}, {"presentation", io::to_json(p)}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diacat: string diagrams, normal forms and decategorification"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto with_preset = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--preset", o.preset,
                    "S, AHDEG (DAHA), BRAID, HECKE, TL, WREATH, AWREATH, OB");
    sub->add_option("-r,--r", o.r, "order of the cyclic group for WREATH/AWREATH")
        ->check(CLI::PositiveNumber);
    sub->add_option("--assign", o.assign, "parameter value, e.g. z=0 (repeatable)")
        ->allow_extra_args(false);
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("expr", o.expr, "expression (read from stdin when omitted)");
    sub->add_option("--file", o.file, "read the input from a file");
  };

  struct Cmd {
    char const* name;
    char const* help;
    Output (*run)(Options const&);
  };
  std::vector<Cmd> cmds = {
      {"normalize", "normal form of an expression", run_normalize},
      {"basis", "basis of End(^n)", run_basis},
      {"dim", "dimension of End(^n)", run_dim},
      {"multiply", "product of basis elements, or the full table", run_multiply},
      {"eval", "evaluate in the matrix model", run_eval},
      {"mate", "mate of a matrix on one up strand", run_mate},
      {"trace", "bubble closure of a matrix", run_trace},
      {"young", "Young idempotent report", run_young},
      {"rank", "rank of a Young idempotent or an induced product", run_rank},
      {"karoubi-check", "Karoubi envelope checks for (^n, e_lambda)", run_karoubi},
      {"frobenius-check", "validate Frobenius data and teleport", run_frobenius},
      {"presentation", "relations of a preset", run_presentation}};

  std::map<CLI::App*, Cmd const*> dispatch;
  for (auto const& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    dispatch[sub] = &c;
    std::string name = c.name;
    if (name == "normalize" || name == "eval") {
      with_preset(sub);
      with_input(sub);
    } else if (name == "basis" || name == "dim" || name == "multiply") {
      with_preset(sub);
      sub->add_option("-n", o.n, "number of strands")->required();
      sub->add_option("-D,--degree", o.degree, "dot degree bound for AHDEG/AWREATH")
          ->check(CLI::NonNegativeNumber);
      if (name == "multiply") {
        sub->add_flag("--table", o.table, "print all structure constants");
        sub->add_option("pair", o.pair, "basis indices I J")->expected(0, 2);
      }
    } else if (name == "presentation") {
      with_preset(sub);
    } else if (name == "mate" || name == "trace") {
      common(sub);
      sub->add_option("matrix", o.matrix, "matrix, rows separated by ';'");
      sub->add_option("--file", o.file, "read the matrix from a file");
      sub->add_option("-m", o.m, "dimension of V")->check(CLI::PositiveNumber);
      if (name == "mate") sub->add_flag("--left", o.left, "left mate instead of right");
    } else if (name == "frobenius-check") {
      common(sub);
      sub->add_option("-r,--r", o.r, "use the group algebra of Z/r")
          ->check(CLI::PositiveNumber);
      with_input(sub);
    } else {
      common(sub);
      sub->add_option("--lambda", o.lambda, "partition, e.g. 3,1,1")->required();
      sub->add_option("--tableau", o.tableau, "standard tableau, e.g. 1,2/3");
      if (name == "rank") sub->add_option("--mu", o.mu, "second partition");
    }
    if (name == "eval") {
      sub->add_option("-m", o.m, "dimension of V")->check(CLI::PositiveNumber)->required();
      sub->add_option("-p", o.p, "extra copies of V for the dot action")
          ->check(CLI::NonNegativeNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Cmd const* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = dispatch.at(sub);
  bool json = o.format == "json";
  try {
    Output out = cmd->run(o);
    if (json) {
      std::cout << out.json.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return 0;
  } catch (Error const& e) {
    if (json) {
      Json j = {{"command", cmd->name},
                {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
      std::cout << j.dump(2) << "\n";
    }
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}
