// Copyright 2026 The defcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "defcoh/problem.hpp"

#include "defcoh/oracle.hpp"
#include "defcoh/parse.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace defcoh {

namespace {

using json = nlohmann::ordered_json;

template <Field F>
json scalar_json(const F& a) {
  if constexpr (FiniteField<F>)
    return FieldTraits<F>::index(a);
  else
    return FieldTraits<F>::to_string(a);
}

template <Field F>
json vector_json(const Vector<F>& v) {
  json out = json::array();
  for (Index i = 0; i < v.rows(); ++i) out.push_back(scalar_json(v(i)));
  return out;
}

template <Field F>
std::string vector_text(const Vector<F>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.rows(); ++i) out += (i ? ", " : "") + FieldTraits<F>::to_string(v(i));
  return out + ")";
}

template <Field F>
F parse_scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return FieldTraits<F>::from_integer(mpz_class(std::to_string(v.get<long long>())));
  if (v.is_string()) {
    try {
      return parse_numeral<F>(v.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(where, e.what());
    }
  }
  throw InputError(where, "expected an integer or a numeral string");
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where, "missing \"" + key + "\"");
  return *it;
}

std::string string_member(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) throw InputError(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw InputError(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

template <Field F>
Polynomial<F> parse_poly(const std::string& text, const std::vector<std::string>& names, const std::string& where) {
  try {
    return parse_polynomial<F>(text, names);
  } catch (const ParseError& e) {
    throw InputError(where, std::string("\"") + text + "\": " + e.what());
  }
}

template <Field F>
PolyList<F> parse_polys(const json& v, const std::vector<std::string>& names, const std::string& where) {
  PolyList<F> out;
  auto texts = string_list(v, where);
  for (std::size_t i = 0; i < texts.size(); ++i)
    out.push_back(parse_poly<F>(texts[i], names, where + "[" + std::to_string(i) + "]"));
  return out;
}

template <Field F>
Matrix<F> parse_matrix(const json& v, Index n, const std::string& where) {
  if (!v.is_array() || static_cast<Index>(v.size()) != n) throw InputError(where, "expected " + std::to_string(n) + " rows");
  Matrix<F> m(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw InputError(where + "[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
    for (Index j = 0; j < n; ++j)
      m(i, j) = parse_scalar<F>(row[static_cast<std::size_t>(j)], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

template <Field F>
Vector<F> parse_vector(const json& v, Index n, const std::string& where) {
  if (!v.is_array() || static_cast<Index>(v.size()) != n) throw InputError(where, "expected " + std::to_string(n) + " entries");
  Vector<F> out(n);
  for (Index i = 0; i < n; ++i) out(i) = parse_scalar<F>(v[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
  return out;
}

template <Field F>
std::uint64_t power_count(Index dim) {
  if constexpr (FiniteField<F>) {
    std::uint64_t c = 1;
    for (Index i = 0; i < dim; ++i) c *= FieldTraits<F>::order;
    return c;
  } else {
    return 0;
  }
}

struct Claims {
  json list = json::array();
  bool mismatch = false;
  std::vector<std::string> text;

  void add(const std::string& claim, const json& analytic, const json& oracle, bool ok) {
    list.push_back({{"claim", claim}, {"analytic", analytic}, {"oracle", oracle}, {"verdict", ok ? "MATCH" : "MISMATCH"}});
    mismatch |= !ok;
    text.push_back("  oracle: " + claim + ": analytic " + analytic.dump() + ", oracle " + oracle.dump() + " -> " +
                   (ok ? "MATCH" : "MISMATCH"));
  }
};

template <Field F>
class Session {
 public:
  Session(const json& doc, const RunOptions& opts) : doc_(doc), opts_(opts) {
    const json empty = json::object();
    const json& options = doc.contains("options") ? doc["options"] : empty;
    oracle_ = opts.oracle || (options.contains("oracle") && options["oracle"].is_boolean() && options["oracle"].get<bool>());
    truncate_ = opts.truncate;
    if (truncate_ == 0 && options.contains("truncate")) {
      if (!options["truncate"].is_number_unsigned()) throw InputError("options.truncate", "expected a non-negative integer");
      truncate_ = options["truncate"].get<unsigned>();
    }
    budget_.candidates = opts.budget;
    if (budget_.candidates == 0 && options.contains("budget")) {
      if (!options["budget"].is_number_unsigned() || options["budget"].get<std::uint64_t>() == 0)
        throw InputError("options.budget", "expected a positive integer");
      budget_.candidates = options["budget"].get<std::uint64_t>();
    }
    if (budget_.candidates == 0) budget_.candidates = EnumerationBudget{}.candidates;
    load_algebras();
    load_modules();
  }

  RunResult run(const std::string& command) {
    RunResult r;
    json problems = json::array();
    std::ostringstream text;
    text << "defcoh " << kVersion << "  field " << FieldTraits<F>::name() << "  budget " << budget_.candidates << "/"
         << budget_.isomorphisms << "\n";
    const json& list = member(doc_, "problems", "$");
    if (!list.is_array()) throw InputError("problems", "expected an array");
    bool any = false, mismatch = false, exhausted = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "problems[" + std::to_string(i) + "]";
      const json& p = list[i];
      std::string kind = string_member(p, "kind", where);
      if (command != "oracle" && kind != command) continue;
      any = true;
      std::string name = p.contains("name") && p["name"].is_string() ? p["name"].get<std::string>() : kind + "#" + std::to_string(i);
      json out = {{"name", name}, {"kind", kind}};
      std::vector<std::string> lines;
      Claims claims;
      bool oracle = oracle_ || command == "oracle";
      auto start = std::chrono::steady_clock::now();
      try {
        if (kind == "tmods")
          tmods(p, where, out, lines, claims, oracle);
        else if (kind == "exal")
          exal(p, where, out, lines, claims, oracle);
        else if (kind == "lift")
          lift(p, where, out, lines, claims, oracle);
        else if (kind == "deform")
          deform(p, where, out, lines, claims, oracle);
        else
          throw InputError(where + ".kind", "unknown kind \"" + kind + "\"");
      } catch (const BudgetExceeded& e) {
        exhausted = true;
        out["budget_exhausted"] = true;
        out["error"] = e.what();
        lines.push_back("  budget exhausted: " + std::string(e.what()));
      }
      if (oracle) {
        out["oracle"] = {{"enabled", FiniteField<F>}, {"claims", claims.list}};
        if (!out.contains("budget_exhausted")) out["budget_exhausted"] = false;
        if constexpr (!FiniteField<F>) lines.push_back("  oracle: skipped (the field is infinite)");
      }
      mismatch |= claims.mismatch;
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      text << "[" << name << "] " << kind << "\n";
      for (const auto& l : lines) text << l << "\n";
      for (const auto& l : claims.text) text << l << "\n";
      text << "  time " << std::fixed << std::setprecision(3) << secs << " s\n";
      problems.push_back(std::move(out));
    }
    if (!any) throw InputError("problems", "no \"" + command + "\" stanzas");
    r.exit_code = mismatch ? kOracleMismatch : (exhausted ? kBudgetExceeded : kOk);
    r.report = {{"tool", "defcoh"},
                {"version", kVersion},
                {"command", command},
                {"field", FieldTraits<F>::name()},
                {"seed", opts_.seed},
                {"budget", {{"candidates", budget_.candidates}, {"isomorphisms", budget_.isomorphisms}}},
                {"problems", std::move(problems)},
                {"status", mismatch ? "mismatch" : (exhausted ? "budget exceeded" : "ok")}};
    text << "status: " << r.report["status"].get<std::string>() << "\n";
    r.text = text.str();
    return r;
  }

 private:
  struct NamedModule {
    std::string algebra;
    FiniteModule<F> module;
  };

  void load_algebras() {
    const json& algs = member(doc_, "algebras", "$");
    if (!algs.is_object()) throw InputError("algebras", "expected an object");
    for (const auto& [name, a] : algs.items()) {
      const std::string where = "algebras." + name;
      std::vector<std::string> base_vars;
      json base_rel = json::array();
      if (a.contains("base")) {
        base_vars = string_list(member(a["base"], "vars", where + ".base"), where + ".base.vars");
        if (a["base"].contains("relations")) base_rel = a["base"]["relations"];
      }
      std::vector<std::string> vars = string_list(member(a, "vars", where), where + ".vars");
      std::vector<std::string> names = base_vars;
      names.insert(names.end(), vars.begin(), vars.end());
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t k = i + 1; k < names.size(); ++k)
          if (names[i] == names[k]) throw InputError(where, "generator \"" + names[i] + "\" is declared twice");
      PolyList<F> g = parse_polys<F>(base_rel, names, where + ".base.relations");
      PolyList<F> f = a.contains("relations") ? parse_polys<F>(a["relations"], names, where + ".relations") : PolyList<F>{};
      try {
        PresentedAlgebra<F> b(base_vars, g, vars, f);
        auto bad = validate(b);
        if (!bad.empty()) throw InputError(where, bad.front());
        algebras_.emplace(name, std::move(b));
      } catch (const std::invalid_argument& e) {
        throw InputError(where, e.what());
      }
    }
  }

  void load_modules() {
    if (!doc_.contains("modules")) return;
    const json& mods = doc_["modules"];
    if (!mods.is_object()) throw InputError("modules", "expected an object");
    for (const auto& [name, m] : mods.items()) {
      const std::string where = "modules." + name;
      std::string an = string_member(m, "algebra", where);
      const auto& b = algebra(an, where + ".algebra");
      FiniteModule<F> j;
      if (m.contains("residue")) {
        j = residue_module(b);
      } else if (m.contains("regular")) {
        if (!m["regular"].is_number_unsigned()) throw InputError(where + ".regular", "expected a truncation degree");
        try {
          j = regular_module(truncate(b, m["regular"].template get<unsigned>()));
        } catch (const NotFiniteDimensional& e) {
          throw InputError(where + ".regular", e.what());
        }
      } else {
        j.labels = string_list(member(m, "labels", where), where + ".labels");
        j.dimension = static_cast<Index>(j.labels.size());
        j.action.assign(b.nvars(), zeros<F>(j.dimension, j.dimension));
        if (m.contains("action")) {
          const json& act = m["action"];
          if (!act.is_object()) throw InputError(where + ".action", "expected an object keyed by generator");
          auto names = b.names();
          for (const auto& [var, mat] : act.items()) {
            auto it = std::find(names.begin(), names.end(), var);
            if (it == names.end()) throw InputError(where + ".action." + var, "unknown generator");
            j.action[static_cast<std::size_t>(it - names.begin())] = parse_matrix<F>(mat, j.dimension, where + ".action." + var);
          }
        }
      }
      auto bad = validate(j, b);
      if (!bad.empty()) throw InputError(where, bad.front());
      modules_.emplace(name, NamedModule{an, std::move(j)});
    }
  }

  const PresentedAlgebra<F>& algebra(const std::string& name, const std::string& where) const {
    auto it = algebras_.find(name);
    if (it == algebras_.end()) throw InputError(where, "unknown algebra \"" + name + "\"");
    return it->second;
  }

  const FiniteModule<F>& module(const json& p, const std::string& alg, const std::string& where) const {
    std::string name = string_member(p, "module", where);
    auto it = modules_.find(name);
    if (it == modules_.end()) throw InputError(where + ".module", "unknown module \"" + name + "\"");
    if (it->second.algebra != alg) throw InputError(where + ".module", "module \"" + name + "\" is over \"" + it->second.algebra + "\", not \"" + alg + "\"");
    return it->second.module;
  }

  unsigned truncation_for(const PresentedAlgebra<F>& b, const FiniteModule<F>& j, const json& p) const {
    unsigned want = truncate_;
    if (p.contains("truncate") && p["truncate"].is_number_unsigned()) want = p["truncate"].get<unsigned>();
    return choose_truncation(b, j, want);
  }

  void tmods(const json& p, const std::string& where, json& out, std::vector<std::string>& lines, Claims& claims, bool oracle) {
    std::string an = string_member(p, "algebra", where);
    const auto& b = algebra(an, where + ".algebra");
    const auto& j = module(p, an, where);
    auto ls = build_ls(b);
    auto c = cochains(ls, j);
    auto t = t_dimensions(c);
    Index der = derivation_space(b, j).dim;
    Index omega = hom_dimension(kaehler(b), j);
    out["algebra"] = an;
    out["T0"] = t[0];
    out["T1"] = t[1];
    out["T2"] = t[2];
    out["complex"] = {{"generators", ls.n()}, {"relations", ls.m()}, {"syzygies", ls.r()}, {"l2_relations", ls.l2_relations.size()}};
    out["derivations"] = der;
    out["hom_omega"] = omega;
    lines.push_back("  dim T0 = " + std::to_string(t[0]) + ", dim T1 = " + std::to_string(t[1]) + ", dim T2 = " + std::to_string(t[2]));
    lines.push_back("  dim Der = " + std::to_string(der) + ", dim Hom(Omega, J) = " + std::to_string(omega));
    if (der != t[0] || omega != t[0]) throw std::logic_error("T0 disagrees with the derivation module");
    if constexpr (FiniteField<F>) {
      if (!oracle) return;
      unsigned d = truncation_for(b, j, p);
      out["truncation"] = d;
      auto model = truncate(b, d);
      auto ders = enumerate_derivations(model, j, budget_);
      claims.add("|Der| = p^dim T0", power_count<F>(t[0]), ders.size(), ders.size() == power_count<F>(t[0]));
      auto r = enumerate_deformations(exal_search(b, j, d), budget_);
      claims.add("|Exal classes| = p^dim T1", power_count<F>(t[1]), r.representatives.size(),
                 r.representatives.size() == power_count<F>(t[1]));
    }
  }

  void exal(const json& p, const std::string& where, json& out, std::vector<std::string>& lines, Claims& claims, bool oracle) {
    std::string an = string_member(p, "algebra", where);
    const auto& b = algebra(an, where + ".algebra");
    const auto& j = module(p, an, where);
    auto ls = build_ls(b);
    unsigned d = truncation_for(b, j, p);
    auto res = exal_classify(ls, j, d);
    out["algebra"] = an;
    out["T1"] = res.t1.dim;
    out["truncation"] = res.truncation;
    json classes = json::array();
    for (const auto& cl : res.classes)
      classes.push_back({{"class", vector_json(cl.coordinates)}, {"cocycle", vector_json(cl.cocycle)}, {"dimension", cl.extension.algebra.dim()}});
    out[FiniteField<F> ? "classes" : "basis_representatives"] = std::move(classes);
    lines.push_back("  dim T1 = " + std::to_string(res.t1.dim) + ", truncation " + std::to_string(res.truncation));
    if constexpr (FiniteField<F>)
      lines.push_back("  " + std::to_string(res.classes.size()) + " classes");
    else
      lines.push_back("  T1 is a " + std::to_string(res.t1.dim) + "-dimensional vector space; listing 0 and a basis");
    for (const auto& cl : res.classes)
      lines.push_back("    class " + vector_text(cl.coordinates) + "  relation values " + vector_text(cl.cocycle));
    if constexpr (FiniteField<F>) {
      if (!oracle) return;
      auto r = enumerate_deformations(exal_search(b, j, res.truncation), budget_);
      claims.add("|Exal classes| = p^dim T1", res.classes.size(), r.representatives.size(), r.representatives.size() == res.classes.size());
      std::size_t hits = 0;
      for (const auto& cl : res.classes) {
        std::size_t n = 0;
        for (auto i : r.representatives)
          if (extension_isomorphism(cl.extension, r.solutions[i])) ++n;
        hits += n == 1;
      }
      claims.add("each realized class is isomorphic to exactly one oracle class", res.classes.size(), hits, hits == res.classes.size());
    }
  }

  void lift(const json& p, const std::string& where, json& out, std::vector<std::string>& lines, Claims& claims, bool oracle) {
    std::string sn = string_member(p, "source", where), tn = string_member(p, "target", where);
    const auto& b = algebra(sn, where + ".source");
    const auto& cp = algebra(tn, where + ".target");
    FiniteModel<F> cprime, c;
    PolyList<F> ideal = p.contains("ideal") ? parse_polys<F>(p["ideal"], cp.names(), where + ".ideal") : PolyList<F>{};
    try {
      cprime = truncate(cp, 0);
      PolyList<F> rel = cp.relations();
      rel.insert(rel.end(), ideal.begin(), ideal.end());
      c = truncate(PresentedAlgebra<F>(cp.base_vars(), cp.base_relations(), cp.vars(), rel), 0);
    } catch (const std::exception& e) {
      throw InputError(where + ".target", e.what());
    }
    LiftProblem<F> lp;
    lp.source = b;
    lp.extension = cprime.algebra;
    lp.quotient = c.algebra;
    lp.projection = Matrix<F>(c.dim(), cprime.dim());
    for (Index k = 0; k < cprime.dim(); ++k)
      lp.projection.col(k) = c.coords(Polynomial<F>::term(cprime.basis[static_cast<std::size_t>(k)], F(1)));
    const json empty = json::object();
    const json& images = p.contains("images") ? p["images"] : empty;
    const json& base_images = p.contains("base_images") ? p["base_images"] : empty;
    auto names = b.names();
    for (std::size_t v = 0; v < b.nvars(); ++v) {
      const bool is_base = v < b.nbase();
      const json& src = is_base ? base_images : images;
      const std::string key = is_base ? "base_images" : "images";
      if (!src.contains(names[v]) || !src[names[v]].is_string())
        throw InputError(where + "." + key, "missing image of \"" + names[v] + "\"");
      auto q = parse_poly<F>(src[names[v]].template get<std::string>(), cp.names(), where + "." + key + "." + names[v]);
      if (is_base) lp.base_images.push_back(cprime.coords(q));
      lp.images.push_back(c.coords(q));
    }
    auto bad = validate(lp);
    if (!bad.empty()) throw InputError(where, bad.front());
    auto res = lift_homomorphism(lp);
    out["source"] = sn;
    out["target"] = tn;
    out["kernel_dimension"] = res.kernel.cols();
    out["derivation_dimension"] = res.freedom.cols();
    out["cocycle"] = vector_json(res.cocycle);
    out["class"] = vector_json(res.class_coordinates);
    out["status"] = res.obstructed ? "Obstructed" : "Lifts";
    auto cnames = cp.names();
    auto poly_text = [&](const Vector<F>& v) { return to_string(cprime.polynomial(v), cnames, cp.order()); };
    lines.push_back("  ideal dimension " + std::to_string(res.kernel.cols()) + ", dim Der = " + std::to_string(res.freedom.cols()));
    if (res.obstructed) {
      lines.push_back("  Obstructed; class in H1 " + vector_text(res.class_coordinates));
    } else {
      json part = json::object();
      std::string desc;
      for (std::size_t i = 0; i < b.nrelative(); ++i) {
        std::string s = poly_text(res.particular[b.flat(i)]);
        part[b.vars()[i]] = s;
        desc += (i ? ", " : "") + b.vars()[i] + " -> " + s;
      }
      out["particular"] = std::move(part);
      json free = json::array();
      const Index dj = res.kernel.cols();
      for (Index k = 0; k < res.freedom.cols(); ++k) {
        json dk = json::object();
        for (std::size_t i = 0; i < b.nrelative(); ++i)
          dk[b.vars()[i]] = poly_text(res.kernel * Vector<F>(res.freedom.col(k).segment(static_cast<Index>(i) * dj, dj)));
        free.push_back(std::move(dk));
      }
      out["freedom"] = std::move(free);
      lines.push_back("  Lifts; particular lift " + desc);
    }
    if constexpr (FiniteField<F>) {
      if (!oracle) return;
      auto lifts = enumerate_lifts(lp, budget_);
      std::uint64_t expect = res.obstructed ? 0 : power_count<F>(res.freedom.cols());
      claims.add("|lifts| = " + std::string(res.obstructed ? "0" : "|Der|"), expect, lifts.size(), lifts.size() == expect);
      std::vector<Vector<F>> group;
      const Index dj = res.kernel.cols();
      for (std::uint64_t g = 0; g < power_count<F>(res.freedom.cols()); ++g)
        group.push_back(res.freedom * vector_from_index<F>(g, res.freedom.cols()));
      auto act = [&](const Vector<F>& d, const std::vector<Vector<F>>& l) {
        auto moved = l;
        for (std::size_t i = 0; i < b.nrelative(); ++i)
          moved[b.flat(i)] += res.kernel * Vector<F>(d.segment(static_cast<Index>(i) * dj, dj));
        return moved;
      };
      auto eq = [](const std::vector<Vector<F>>& x, const std::vector<Vector<F>>& y) { return x == y; };
      auto report = check_torsor_action(lifts, group, act, eq);
      out["torsor"] = report.verdict;
      bool ok = res.obstructed ? report.empty : report.bijection;
      claims.add("Der acts simply transitively on lifts", res.obstructed ? "pseudo-torsor, empty" : "bijection", report.verdict, ok);
    }
  }

  void deform(const json& p, const std::string& where, json& out, std::vector<std::string>& lines, Claims& claims, bool oracle) {
    std::string an = string_member(p, "algebra", where);
    const auto& b = algebra(an, where + ".algebra");
    const auto& j = module(p, an, where);
    auto names = b.names();
    BaseDeformationProblem<F> prob;
    prob.algebra = b;
    prob.module = j;
    prob.base_lift = parse_polys<F>(member(p, "base_lift", where), names, where + ".base_lift");
    prob.base_ideal = parse_polys<F>(member(p, "base_ideal", where), names, where + ".base_ideal");
    const json& phi = member(p, "phi", where);
    if (!phi.is_array() || phi.size() != prob.base_ideal.size())
      throw InputError(where + ".phi", "expected one vector per generator of base_ideal");
    for (std::size_t l = 0; l < phi.size(); ++l)
      prob.phi.push_back(parse_vector<F>(phi[l], j.dim(), where + ".phi[" + std::to_string(l) + "]"));
    prob = normalize(prob);
    auto bad = validate(prob);
    if (!bad.empty()) throw InputError(where, bad.front());
    unsigned d = truncation_for(b, j, p);
    auto res = realize_deformation(prob, d, std::nullopt, opts_.seed);
    const auto& ob = res.obstruction;
    Index t1 = t_module(ob.complex, 1).dim;
    out["algebra"] = an;
    out["T1"] = t1;
    out["T2"] = ob.t2.dim;
    out["truncation"] = d;
    out["obstruction"] = {{"cocycle", vector_json(ob.cocycle)},
                          {"class", vector_json(ob.class_coordinates)},
                          {"zero", ob.zero},
                          {"second_lift_agrees", ob.lifts_agree}};
    out["status"] = ob.zero ? "Solvable" : "Obstructed";
    lines.push_back("  dim T1 = " + std::to_string(t1) + ", dim T2 = " + std::to_string(ob.t2.dim) + ", truncation " + std::to_string(d));
    lines.push_back("  obstruction class " + vector_text(ob.class_coordinates) + (ob.zero ? " (zero)" : " (nonzero)") +
                    "; second lift " + (ob.lifts_agree ? "agrees" : "DISAGREES"));
    if (!ob.lifts_agree) throw std::logic_error("obstruction classes from two relation lifts differ");
    if (res.solution) {
      out["solution"] = {{"dimension", res.solution->algebra.dim()}, {"relation_values", vector_json(res.psi)}};
      lines.push_back("  Solvable; realized B' of dimension " + std::to_string(res.solution->algebra.dim()));
    } else {
      lines.push_back("  Obstructed");
    }
    if constexpr (FiniteField<F>) {
      if (!oracle) return;
      auto r = enumerate_deformations(deformation_search(prob, d), budget_);
      claims.add("obstruction vanishes iff solutions exist", ob.zero, !r.solutions.empty(), ob.zero == !r.solutions.empty());
      if (ob.zero) {
        claims.add("|classes| = p^dim T1", power_count<F>(t1), r.representatives.size(), r.representatives.size() == power_count<F>(t1));
        bool found = false;
        for (auto i : r.representatives) found |= extension_isomorphism(*res.solution, r.solutions[i]).has_value();
        claims.add("realized B' occurs among oracle solutions", true, found, found);
      }
    }
  }

  const json& doc_;
  RunOptions opts_;
  bool oracle_ = false;
  unsigned truncate_ = 0;
  EnumerationBudget budget_;
  std::map<std::string, PresentedAlgebra<F>> algebras_;
  std::map<std::string, NamedModule> modules_;
};

template <Field F>
RunResult run_in(const std::string& command, const json& doc, const RunOptions& opts) {
  Session<F> s(doc, opts);
  return s.run(command);
}

}  // namespace

RunResult run_problems(const std::string& command, const json& doc, const RunOptions& options) {
  static const std::vector<std::string> commands{"tmods", "exal", "lift", "deform", "oracle"};
  RunResult r;
  try {
    if (std::find(commands.begin(), commands.end(), command) == commands.end())
      throw InputError("command", "unknown command \"" + command + "\"");
    std::string field = options.field;
    if (field.empty()) field = string_member(doc, "field", "$");
    if (field == "F2") return run_in<F2>(command, doc, options);
    if (field == "F3") return run_in<F3>(command, doc, options);
    if (field == "F5") return run_in<F5>(command, doc, options);
    if (field == "Q") return run_in<Rational>(command, doc, options);
    throw InputError(options.field.empty() ? "field" : "--field", "unknown field \"" + field + "\" (F2, F3, F5 or Q)");
  } catch (const InputError& e) {
    r.exit_code = kInvalidInput;
    r.report = {{"tool", "defcoh"}, {"version", kVersion}, {"status", "invalid input"}, {"error", e.what()}};
    r.text = std::string("invalid input: ") + e.what() + "\n";
  } catch (const json::exception& e) {
    r.exit_code = kInvalidInput;
    r.report = {{"tool", "defcoh"}, {"version", kVersion}, {"status", "invalid input"}, {"error", e.what()}};
    r.text = std::string("invalid input: ") + e.what() + "\n";
  }
  return r;
}

RunResult run_file(const std::string& command, const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) {
    RunResult r;
    r.exit_code = kInvalidInput;
    r.report = {{"tool", "defcoh"}, {"version", kVersion}, {"status", "invalid input"}, {"error", "cannot read " + path}};
    r.text = "invalid input: cannot read " + path + "\n";
    return r;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    RunResult r;
    r.exit_code = kInvalidInput;
    r.report = {{"tool", "defcoh"}, {"version", kVersion}, {"status", "invalid input"}, {"error", path + ": " + e.what()}};
    r.text = "invalid input: " + path + ": " + e.what() + "\n";
    return r;
  }
  return run_problems(command, doc, options);
}

}  // namespace defcoh
