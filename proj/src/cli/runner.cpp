#include "dkit/cli/runner.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "dkit/decomposition.hpp"
#include "dkit/properties.hpp"
#include "dkit/transforms.hpp"

namespace dkit::script {

bool Report::ok() const {
  if (error) return false;
  for (const auto& e : expectations)
    if (!e.ok) return false;
  return true;
}

bool all_ok(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

namespace {

using json = nlohmann::ordered_json;

json generators(const MonomialIdeal& I) {
  json a = json::array();
  for (const auto& g : I.exponents()) a.push_back(format_monomial(I.ring(), g));
  return a;
}

template <class T>
std::string render_set(const std::vector<T>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + "}";
}

json primes_json(const std::vector<PrimeSupport>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Monomial make_monomial(const RingContext& ring, const std::vector<Factor>& fs) {
  ExponentVector e(ring.num_vars(), 0);
  for (const auto& f : fs) {
    auto i = ring.index_of(f.var);
    if (!i) throw PreconditionError("variable '" + f.var + "' is not in this ring");
    if (f.exp > std::numeric_limits<Exponent>::max()) throw OverflowError("exponent too large");
    if (__builtin_add_overflow(e[*i], static_cast<Exponent>(f.exp), &e[*i])) throw OverflowError("exponent too large");
  }
  return Monomial(ring, std::move(e));
}

Monomial make_monomial(const RingContext& ring, const Value& v) {
  if (v.kind == Value::Kind::Integer && v.integer == 1) return Monomial::one(ring);
  if (!v.is_monomial()) throw PreconditionError("expected a monomial, got " + print_value(v));
  return make_monomial(ring, v.factors);
}

MonomialIdeal make_ideal(const RingContext& ring, const std::vector<Term>& terms) {
  if (terms.size() == 1 && terms[0].is_integer) {
    if (terms[0].integer == 0) return MonomialIdeal::zero(ring);
    if (terms[0].integer == 1) return MonomialIdeal::unit(ring);
  }
  kernels::Generators gens;
  for (const auto& t : terms) {
    if (t.is_integer) {
      if (t.integer != 1) throw PreconditionError("an ideal literal holds monomials, or is (0) or (1)");
      gens.push_back(ExponentVector(ring.num_vars(), 0));
    } else {
      gens.push_back(make_monomial(ring, t.factors).exponents());
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::size_t var_index(const RingContext& ring, const std::string& name) {
  auto i = ring.index_of(name);
  if (!i) throw PreconditionError("variable '" + name + "' is not in this ring");
  return *i;
}

std::vector<std::size_t> var_list(const RingContext& ring, const std::vector<Term>& terms) {
  std::vector<std::size_t> out;
  for (const auto& t : terms) {
    if (t.is_integer || t.factors.size() != 1 || t.factors[0].exp != 1)
      throw PreconditionError("expected a list of variables");
    out.push_back(var_index(ring, t.factors[0].var));
  }
  return out;
}

PrimeSupport make_prime(const RingContext& ring, const std::vector<Term>& terms) {
  return PrimeSupport(ring, var_list(ring, terms));
}

IrreducibleComponent make_component(const RingContext& ring, const std::vector<Term>& terms) {
  std::vector<IrreducibleComponent::Power> powers;
  for (const auto& t : terms) {
    if (t.is_integer || t.factors.size() != 1) throw PreconditionError("a component lists pure powers");
    powers.emplace_back(var_index(ring, t.factors[0].var), static_cast<Exponent>(t.factors[0].exp));
  }
  return IrreducibleComponent(ring, std::move(powers));
}

std::vector<std::uint64_t> int_list(const std::vector<Term>& terms) {
  std::vector<std::uint64_t> out;
  for (const auto& t : terms) out.push_back(t.integer);
  return out;
}

json certificate_json(const DemotionCertificate& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  if (c.verdict != DemotionVerdict::CertifiedStructural) {
    j["r_max"] = c.r_max;
    j["s_max"] = c.s_max;
  }
  if (!c.theorem_tag.empty()) j["theorem_tag"] = c.theorem_tag;
  j["proper"] = c.proper;
  if (c.ntf_bound) j["ntf_bound"] = c.ntf_bound;
  if (c.self_check) j["self_check"] = *c.self_check;
  if (!c.failures.empty()) {
    json fs = json::array();
    for (const auto& f : c.failures) {
      json w = json::array();
      for (const auto& m : f.witnesses) w.push_back(m.to_string());
      fs.push_back(json{{"r", f.r}, {"s", f.s}, {"witnesses", w}});
    }
    j["failures"] = fs;
  }
  return j;
}

json witness_json(const std::optional<DemotionWitness>& w) {
  if (!w) return nullptr;
  return json{{"r", w->r}, {"s", w->s}, {"monomial", w->monomial.to_string()}};
}

json ntf_json(const NtfCertificate& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = to_string(c.method);
  if (c.verdict == NtfVerdict::NtfBounded) j["k_max"] = c.k_max;
  if (c.failing_power) j["failing_power"] = *c.failing_power;
  if (c.offending_prime) j["offending_prime"] = c.offending_prime->to_string();
  if (c.witness) j["witness"] = c.witness->to_string();
  return j;
}

class Executor {
 public:
  Executor(const Script& s, const RunOptions& o) : ring_(s.ring), opts_(o) {}

  void bind(const Binding& b, std::vector<Report>& out) {
    try {
      ideals_.insert_or_assign(b.name, eval(b.expr));
      // A rebound name no longer refers to the ideal a certificate was issued for.
      for (auto it = certs_.begin(); it != certs_.end();)
        it = (it->first.first == b.name || it->first.second == b.name) ? certs_.erase(it) : std::next(it);
    } catch (const std::exception& e) {
      Report r;
      r.command = print_statement(b);
      r.pos = b.pos;
      r.verdict = "ERROR";
      r.error = e.what();
      out.push_back(std::move(r));
    }
  }

  Report execute(const Command& c) {
    Report r;
    r.command = print_statement(c);
    r.pos = c.pos;
    auto start = std::chrono::steady_clock::now();
    try {
      dispatch(c, r);
    } catch (const std::exception& e) {
      r.verdict = "ERROR";
      r.error = e.what();
    }
    if (opts_.timing)
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  const MonomialIdeal& ideal(const std::string& name) {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw PreconditionError("unbound identifier '" + name + "'");
    return it->second;
  }
  const MonomialIdeal& ideal(const Value& v) { return ideal(v.text); }

  void input(Report& r, const Value& v) { r.inputs[v.text] = generators(ideal(v)); }

  MonomialIdeal eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal: return make_ideal(ring_, e.literal);
      case Expr::Kind::Name: return ideal(e.lhs);
      case Expr::Kind::Power: return ideal_power(ideal(e.lhs), e.exponent);
      case Expr::Kind::Binary: {
        const auto& a = ideal(e.lhs);
        const auto& b = ideal(e.rhs);
        switch (e.op) {
          case '+': return ideal_sum(a, b);
          case '*': return ideal_product(a, b);
          case '&': return ideal_intersection(a, b);
          default: return ideal_colon(a, b);
        }
      }
      case Expr::Kind::Call:
        if (e.func == "radical") return radical(ideal(e.args[0].text));
        return symbolic_power(ideal(e.args[0].text), e.args[1].integer);
    }
    throw Error("bad expression");
  }

  unsigned bound(const Command& c, const char* key, unsigned fallback) {
    const Value* v = c.option(key);
    if (!v) return fallback;
    if (v->integer > 1u << 12) throw PreconditionError(std::string(key) + " too large");
    return static_cast<unsigned>(v->integer);
  }

  static void expect(Report& r, const std::string& key, std::string expected, std::string actual) {
    bool ok = expected == actual;
    r.expectations.push_back({key, std::move(expected), std::move(actual), ok});
  }

  static std::string word_of(const Value& v) {
    return v.kind == Value::Kind::Word || v.kind == Value::Kind::String ? v.text : print_value(v);
  }

  void expect_verdict(const Command& c, Report& r) {
    if (const Value* v = c.option("expect")) expect(r, "expect", word_of(*v), r.verdict);
  }

  void expect_demotion(const Command& c, Report& r, const RingContext& ring, const std::optional<DemotionCertificate>& cert) {
    expect_verdict(c, r);
    if (const Value* v = c.option("tag")) expect(r, "tag", word_of(*v), cert ? cert->theorem_tag : "");
    const std::optional<DemotionWitness> w = cert ? cert->witness : std::nullopt;
    if (const Value* v = c.option("witness"))
      expect(r, "witness", make_monomial(ring, *v).to_string(), w ? w->monomial.to_string() : "none");
    if (const Value* v = c.option("at"))
      expect(r, "at", print_value(*v), w ? std::to_string(w->r) + "," + std::to_string(w->s) : "none");
  }

  void remember(const std::string& I, const std::string& J, const DemotionCertificate& c) { certs_[{I, J}] = c; }

  void dispatch(const Command& c, Report& r) {
    const auto head = c.head();
    if (c.verb == "check") return check(c, r);
    if (c.verb == "transform") return transform(c, r);
    if (c.verb == "transport") return transport(c, r);
    if (c.verb == "construct") return construct(c, r);
    if (c.verb == "property") return property(c, r);

    const auto& I = ideal(c.args[0]);
    input(r, c.args[0]);
    if (head == "ass" || head == "minprimes") {
      auto ps = head == "ass" ? associated_primes(I) : minimal_primes(I);
      r.verdict = render_set(ps);
      r.result["primes"] = primes_json(ps);
      if (const Value* v = c.option("expect")) {
        if (v->kind != Value::Kind::Set) throw PreconditionError("expect takes a set of primes");
        std::vector<PrimeSupport> want;
        for (const auto& t : v->set) want.push_back(make_prime(I.ring(), t));
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        expect(r, "expect", render_set(want), r.verdict);
      }
    } else if (head == "decompose") {
      auto d = irreducible_decomposition(I);
      r.verdict = render_set(d.components);
      json a = json::array();
      for (const auto& comp : d.components) a.push_back(comp.to_string());
      r.result["components"] = a;
      r.result["irredundant"] = d.irredundant;
      if (const Value* v = c.option("expect")) {
        if (v->kind != Value::Kind::Set) throw PreconditionError("expect takes a set of components");
        std::vector<IrreducibleComponent> want;
        for (const auto& t : v->set) want.push_back(make_component(I.ring(), t));
        std::sort(want.begin(), want.end());
        expect(r, "expect", render_set(want), r.verdict);
      }
    } else if (head == "height") {
      r.verdict = std::to_string(height(I));
      expect_verdict(c, r);
    } else if (head == "contains") {
      const auto& a = c.args[1];
      bool in;
      if (a.kind == Value::Kind::Word && ideals_.count(a.text)) {
        input(r, a);
        in = I.contains(ideal(a));
      } else {
        auto m = make_monomial(I.ring(), a);
        r.parameters["monomial"] = m.to_string();
        in = I.contains(m);
      }
      r.verdict = in ? "true" : "false";
      expect_verdict(c, r);
    } else if (head == "equal") {
      input(r, c.args[1]);
      r.verdict = I == ideal(c.args[1]) ? "true" : "false";
      expect_verdict(c, r);
    } else if (head == "show") {
      r.verdict = I.to_string();
      r.result["size"] = I.size();
      expect_ideal(c, r, I.ring());
      if (const Value* v = c.option("size")) expect(r, "size", std::to_string(v->integer), std::to_string(I.size()));
    }
  }

  void expect_ideal(const Command& c, Report& r, const RingContext& ring) {
    if (const Value* v = c.option("expect")) {
      if (v->kind != Value::Kind::Tuple) throw PreconditionError("expect takes an ideal literal");
      expect(r, "expect", make_ideal(ring, v->tuple).to_string(), r.verdict);
    }
  }

  void check(const Command& c, Report& r) {
    if (c.sub == "demotion") {
      const auto& I = ideal(c.args[0]);
      const auto& J = ideal(c.args[1]);
      input(r, c.args[0]);
      input(r, c.args[1]);
      unsigned rm = bound(c, "rmax", opts_.bounds.r_max), sm = bound(c, "smax", opts_.bounds.s_max);
      r.parameters["r_max"] = rm;
      r.parameters["s_max"] = sm;
      auto cert = check_demotion(I, J, rm, sm);
      r.verdict = to_string(cert.verdict);
      r.witness = witness_json(cert.witness);
      r.result = certificate_json(cert);
      remember(c.args[0].text, c.args[1].text, cert);
      expect_demotion(c, r, I.ring(), cert);
    } else if (c.sub == "reduction") {
      const auto& J = ideal(c.args[0]);
      const auto& I = ideal(c.args[1]);
      input(r, c.args[0]);
      input(r, c.args[1]);
      unsigned nm = bound(c, "nmax", opts_.bounds.n_max);
      r.parameters["n_max"] = nm;
      auto cert = check_reduction(J, I, nm);
      r.verdict = to_string(cert.verdict);
      r.result["n"] = cert.n;
      r.result["radical_obstruction"] = cert.radical_obstruction;
      json w = json::array();
      for (const auto& m : cert.witnesses) w.push_back(m.to_string());
      r.result["witnesses"] = w;
      if (!cert.witnesses.empty()) r.witness = json{{"n", 0}, {"monomial", cert.witnesses.front().to_string()}};
      expect_verdict(c, r);
      if (const Value* v = c.option("n")) expect(r, "n", std::to_string(v->integer), std::to_string(cert.n));
      if (const Value* v = c.option("witness"))
        expect(r, "witness", make_monomial(I.ring(), *v).to_string(),
               cert.witnesses.empty() ? "none" : cert.witnesses.front().to_string());
    } else if (c.sub == "ntf") {
      const auto& I = ideal(c.args[0]);
      input(r, c.args[0]);
      unsigned km = bound(c, "kmax", opts_.bounds.k_max);
      r.parameters["k_max"] = km;
      auto cert = check_ntf(I, km);
      r.verdict = to_string(cert.verdict);
      r.result = ntf_json(cert);
      if (cert.witness) r.witness = json{{"k", *cert.failing_power}, {"monomial", cert.witness->to_string()}};
      expect_verdict(c, r);
      if (const Value* v = c.option("method")) expect(r, "method", word_of(*v), to_string(cert.method));
      if (const Value* v = c.option("at"))
        expect(r, "at", print_value(*v), cert.failing_power ? std::to_string(*cert.failing_power) : "none");
      if (const Value* v = c.option("witness"))
        expect(r, "witness", make_monomial(I.ring(), *v).to_string(), cert.witness ? cert.witness->to_string() : "none");
      if (const Value* v = c.option("prime")) {
        if (v->kind != Value::Kind::Tuple) throw PreconditionError("prime takes a list of variables");
        expect(r, "prime", make_prime(I.ring(), v->tuple).to_string(),
               cert.offending_prime ? cert.offending_prime->to_string() : "none");
      }
    } else if (c.sub == "witness") {
      const auto& I = ideal(c.args[0]);
      const auto& J = ideal(c.args[1]);
      input(r, c.args[0]);
      input(r, c.args[1]);
      const Value* at = c.option("at");
      if (at->kind != Value::Kind::Pair) throw PreconditionError("at takes r,s");
      auto w = make_monomial(I.ring(), c.args[2]);
      unsigned rr = static_cast<unsigned>(at->integer), ss = static_cast<unsigned>(at->second);
      r.parameters["r"] = rr;
      r.parameters["s"] = ss;
      bool in_sum = ideal_power(I, rr + ss).contains(w);
      bool in_js = ideal_power(J, ss).contains(w);
      bool in_prod = ideal_product(ideal_power(I, rr), ideal_power(J, ss)).contains(w);
      r.result["in_I^(r+s)"] = in_sum;
      r.result["in_J^s"] = in_js;
      r.result["in_I^r*J^s"] = in_prod;
      r.verdict = in_sum && in_js && !in_prod ? "VALID" : "INVALID";
      r.witness = json{{"r", rr}, {"s", ss}, {"monomial", w.to_string()}};
      expect_verdict(c, r);
    }
  }

  MonomialIdeal apply(const std::string& op, const MonomialIdeal& I, const Value& a) {
    const auto& ring = I.ring();
    if (op == "localize") return localize(I, make_prime(ring, a.tuple));
    if (op == "contract") return contract(I, var_index(ring, a.text));
    if (op == "delete") return delete_variable(I, var_index(ring, a.text));
    if (op == "permute") return permute(I, Permutation::cycle(var_list(ring, a.tuple)));
    if (op == "multiple") return monomial_multiple(I, make_monomial(ring, a));
    if (op == "expand") {
      auto v = int_list(a.tuple);
      return expand(I, ExpansionSpec{std::vector<std::size_t>(v.begin(), v.end())});
    }
    if (op == "weight") return weight(I, weight_spec(a));
    throw PreconditionError("unknown transform '" + op + "'");
  }

  static WeightSpec weight_spec(const Value& a) {
    WeightSpec w;
    for (auto x : int_list(a.tuple)) {
      if (x > std::numeric_limits<Exponent>::max()) throw OverflowError("weight too large");
      w.weights.push_back(static_cast<Exponent>(x));
    }
    return w;
  }

  void transform(const Command& c, Report& r) {
    const auto& I = ideal(c.args[0]);
    input(r, c.args[0]);
    MonomialIdeal out = I;
    if (c.sub == "sum") {
      input(r, c.args[1]);
      out = ideal_sum(I, ideal(c.args[1]));
    } else {
      r.parameters["argument"] = print_value(c.args[1]);
      out = apply(c.sub, I, c.args[1]);
    }
    r.verdict = out.to_string();
    r.result["ring"] = out.ring().names();
    r.result["generators"] = generators(out);
    expect_ideal(c, r, out.ring());
    ideals_.insert_or_assign(c.outputs[0], std::move(out));
  }

  DemotionCertificate certificate_for(const Command& c, Report& r, const Value& a, const Value& b) {
    auto it = certs_.find({a.text, b.text});
    if (it != certs_.end()) {
      r.parameters["input_certificate"] = "from an earlier command";
      return it->second;
    }
    unsigned rm = bound(c, "rmax", opts_.bounds.r_max), sm = bound(c, "smax", opts_.bounds.s_max);
    r.parameters["input_certificate"] = "checked at (" + std::to_string(rm) + "," + std::to_string(sm) + ")";
    return check_demotion(ideal(a), ideal(b), rm, sm);
  }

  void transport(const Command& c, Report& r) {
    for (const auto& a : c.args)
      if (a.kind == Value::Kind::Word && ideals_.count(a.text) && &a - &c.args[0] < (c.sub == "sum" ? 4 : 2)) input(r, a);
    const auto& I = ideal(c.args[0]);
    const auto& J = ideal(c.args[1]);
    auto cert = certificate_for(c, r, c.args[0], c.args[1]);
    TransportedPair t{I, J, std::nullopt, {}};
    const auto& ring = I.ring();
    if (c.sub == "sum") {
      auto cert2 = certificate_for(c, r, c.args[2], c.args[3]);
      t = sum_disjoint(I, J, cert, ideal(c.args[2]), ideal(c.args[3]), cert2);
    } else {
      const auto& a = c.args[2];
      r.parameters["argument"] = print_value(a);
      if (c.sub == "localize") t = transport_localize(I, J, cert, make_prime(ring, a.tuple));
      else if (c.sub == "contract") t = transport_contract(I, J, cert, var_index(ring, a.text));
      else if (c.sub == "delete") t = transport_delete(I, J, cert, var_index(ring, a.text));
      else if (c.sub == "permute") t = transport_permute(I, J, cert, Permutation::cycle(var_list(ring, a.tuple)));
      else if (c.sub == "multiple") t = transport_multiple(I, J, cert, make_monomial(ring, a));
      else if (c.sub == "expand") {
        auto v = int_list(a.tuple);
        t = transport_expand(I, J, cert, ExpansionSpec{std::vector<std::size_t>(v.begin(), v.end())});
      } else if (c.sub == "weight") t = transport_weight(I, J, cert, weight_spec(a));
    }
    r.result["ideal"] = generators(t.ideal);
    r.result["demotion"] = generators(t.demotion);
    r.result["note"] = t.note;
    r.verdict = t.certificate ? to_string(t.certificate->verdict) : "NO_CONCLUSION";
    if (t.certificate) {
      r.result["certificate"] = certificate_json(*t.certificate);
      r.witness = witness_json(t.certificate->witness);
      remember(c.outputs[0], c.outputs[1], *t.certificate);
    }
    expect_demotion(c, r, t.ideal.ring(), t.certificate);
    ideals_.insert_or_assign(c.outputs[0], t.ideal);
    ideals_.insert_or_assign(c.outputs[1], t.demotion);
  }

  void construction_report(const Command& c, Report& r, const DemotionConstruction& d) {
    r.transcript = d.transcript;
    r.verdict = d.certificate ? to_string(d.certificate->verdict) : "REFUSED";
    r.result["ideal"] = generators(d.ideal);
    r.result["demotion"] = generators(d.demotion);
    if (d.certificate) {
      r.result["certificate"] = certificate_json(*d.certificate);
      r.witness = witness_json(d.certificate->witness);
    } else {
      r.result["refusal"] = d.refusal();
    }
    expect_demotion(c, r, d.ideal.ring(), d.certificate);
    if (const Value* v = c.option("proper"))
      expect(r, "proper", word_of(*v), d.certificate ? (d.certificate->proper ? "true" : "false") : "none");
    if (const Value* v = c.option("refusal")) expect(r, "refusal", word_of(*v), d.refused() ? d.refusal() : "none");
  }

  void ntf_report(const Command& c, Report& r, const NtfConstruction& d) {
    r.transcript = d.transcript;
    r.verdict = d.certificate ? to_string(d.certificate->verdict) : "REFUSED";
    r.result["ideal"] = generators(d.ideal);
    r.result["ring"] = d.ideal.ring().names();
    r.result["theorem_tag"] = d.theorem_tag;
    if (!d.associated.empty()) {
      r.result["associated_primes"] = primes_json(d.associated);
      r.result["predicted_primes"] = primes_json(d.predicted);
    }
    if (d.certificate) r.result["certificate"] = ntf_json(*d.certificate);
    else r.result["refusal"] = d.refusal();
    expect_verdict(c, r);
    if (const Value* v = c.option("tag")) expect(r, "tag", word_of(*v), d.theorem_tag);
    if (const Value* v = c.option("refusal")) expect(r, "refusal", word_of(*v), d.refused() ? d.refusal() : "none");
  }

  void construct(const Command& c, Report& r) {
    const auto& s = c.sub;
    unsigned km = bound(c, "kmax", opts_.bounds.k_max);
    auto bind2 = [&](const DemotionConstruction& d) {
      ideals_.insert_or_assign(c.outputs[0], d.ideal);
      ideals_.insert_or_assign(c.outputs[1], d.demotion);
      if (d.certificate) remember(c.outputs[0], c.outputs[1], *d.certificate);
    };
    if (s == "prime_in_prime") {
      auto d = demote_prime_in_prime(make_prime(ring_, c.args[0].tuple), make_prime(ring_, c.args[1].tuple));
      construction_report(c, r, d);
      bind2(d);
    } else if (s == "frobenius") {
      r.parameters["m"] = c.args[0].integer;
      auto d = demote_frobenius_of_prime(ring_, static_cast<unsigned>(std::min<std::uint64_t>(c.args[0].integer, 1u << 20)));
      construction_report(c, r, d);
      bind2(d);
    } else if (s == "principal") {
      const auto& J = ideal(c.args[1]);
      input(r, c.args[1]);
      auto d = principal_demotion_check(make_monomial(J.ring(), c.args[0]), J);
      construction_report(c, r, d);
      ideals_.insert_or_assign(c.outputs[0], d.ideal);
      if (d.certificate) remember(c.outputs[0], c.args[1].text, *d.certificate);
    } else if (s == "prime_intersection") {
      const auto& I = ideal(c.args[0]);
      input(r, c.args[0]);
      r.parameters["k_max"] = km;
      auto d = demote_by_prime_intersection(I, make_prime(I.ring(), c.args[1].tuple), km);
      construction_report(c, r, d);
      ideals_.insert_or_assign(c.outputs[0], d.demotion);
      if (d.certificate) remember(c.args[0].text, c.outputs[0], *d.certificate);
    } else if (s == "edge_extension") {
      const auto& J = ideal(c.args[0]);
      input(r, c.args[0]);
      r.parameters["k_max"] = km;
      auto d = demote_edge_extension(J, var_index(J.ring(), c.args[1].text), var_index(J.ring(), c.args[2].text), km);
      construction_report(c, r, d);
      ideals_.insert_or_assign(c.outputs[0], d.ideal);
      if (d.certificate) remember(c.outputs[0], c.args[0].text, *d.certificate);
    } else if (s == "ntf_product") {
      input(r, c.args[0]);
      input(r, c.args[1]);
      unsigned rr = static_cast<unsigned>(c.args[2].integer), ss = static_cast<unsigned>(c.args[3].integer);
      r.parameters["r"] = rr;
      r.parameters["s"] = ss;
      r.parameters["k_max"] = km;
      std::optional<DemotionCertificate> known;
      if (auto it = certs_.find({c.args[0].text, c.args[1].text}); it != certs_.end()) known = it->second;
      auto d = build_ntf_product(ideal(c.args[0]), ideal(c.args[1]), rr, ss, km, known, opts_.bounds);
      ntf_report(c, r, d);
      ideals_.insert_or_assign(c.outputs[0], d.ideal);
    } else if (s == "ntf_extension") {
      const auto& J = ideal(c.args[0]);
      input(r, c.args[0]);
      r.parameters["m"] = c.args[3].integer;
      r.parameters["k_max"] = km;
      auto d = build_ntf_sum_extension(J, var_index(J.ring(), c.args[1].text), var_index(J.ring(), c.args[2].text),
                                       static_cast<unsigned>(std::min<std::uint64_t>(c.args[3].integer, 64)), km);
      ntf_report(c, r, d);
      ideals_.insert_or_assign(c.outputs[0], d.ideal);
    } else if (s == "family") {
      r.parameters["k"] = c.args[0].integer;
      r.parameters["a"] = c.args[1].integer;
      r.parameters["b"] = c.args[2].integer;
      if (c.args[1].integer > 64 || c.args[2].integer > 64) throw PreconditionError("family: a and b are limited to 64");
      auto t = infinite_family(c.args[0].integer, c.args[1].integer, c.args[2].integer);
      DemotionConstruction d{t.ideal, t.demotion, {}, t.certificate};
      construction_report(c, r, d);
      r.result["note"] = t.note;
      bind2(d);
    }
  }

  void property(const Command& c, Report& r) {
    std::size_t cases = 200;
    if (const Value* v = c.option("cases")) cases = v->integer;
    r.parameters["cases"] = cases;
    r.parameters["seed"] = opts_.seed;
    auto res = properties::run(c.sub, cases, opts_.seed);
    r.verdict = res.passed() ? "PASS" : "FAIL";
    r.result["cases"] = res.cases;
    r.result["exercised"] = res.exercised;
    r.result["failures"] = res.failures;
    if (res.counterexample) r.result["counterexample"] = *res.counterexample;
    if (const Value* v = c.option("expect")) expect(r, "expect", word_of(*v), r.verdict);
    else expect(r, "expect", "PASS", r.verdict);
  }

  RingContext ring_;
  RunOptions opts_;
  std::map<std::string, MonomialIdeal> ideals_;
  std::map<std::pair<std::string, std::string>, DemotionCertificate> certs_;
};

}  // namespace

std::vector<Report> run(const Script& script, const RunOptions& options) {
  Executor ex(script, options);
  std::vector<Report> out;
  for (const auto& st : script.statements) {
    if (const auto* b = std::get_if<Binding>(&st)) ex.bind(*b, out);
    else out.push_back(ex.execute(std::get<Command>(st)));
  }
  return out;
}

nlohmann::ordered_json to_json(const Report& r) {
  json j;
  j["line"] = r.pos.line;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["parameters"] = r.parameters;
  j["verdict"] = r.verdict;
  j["witness"] = r.witness;
  j["result"] = r.result;
  json t = json::array();
  for (const auto& h : r.transcript) t.push_back(json{{"hypothesis", h.name}, {"passed", h.passed}, {"detail", h.detail}});
  j["transcript"] = t;
  json e = json::array();
  for (const auto& x : r.expectations)
    e.push_back(json{{"key", x.key}, {"expected", x.expected}, {"actual", x.actual}, {"ok", x.ok}});
  j["expectations"] = e;
  j["ok"] = r.ok();
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<Report>& reports, const std::string& script_name,
                               const RunOptions& options) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "dkit";
  j["script"] = script_name;
  j["seed"] = options.seed;
  j["bounds"] = json{{"r_max", options.bounds.r_max},
                     {"s_max", options.bounds.s_max},
                     {"n_max", options.bounds.n_max},
                     {"k_max", options.bounds.k_max}};
  json rs = json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    rs.push_back(to_json(r));
    if (!r.ok()) ++failed;
  }
  j["reports"] = rs;
  j["summary"] = json{{"reports", reports.size()}, {"passed", reports.size() - failed}, {"failed", failed}};
  return j;
}

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << (r.ok() ? "ok   " : "FAIL ") << "line " << r.pos.line << ": " << r.command << "\n";
    os << "     -> " << r.verdict;
    if (r.witness.is_object() && r.witness.contains("monomial")) {
      os << "  witness " << r.witness["monomial"].get<std::string>();
      if (r.witness.contains("r"))
        os << " at (" << r.witness["r"].get<unsigned>() << "," << r.witness["s"].get<unsigned>() << ")";
    }
    if (r.result.is_object() && r.result.contains("theorem_tag") && r.result["theorem_tag"].is_string())
      os << "  [" << r.result["theorem_tag"].get<std::string>() << "]";
    else if (r.result.is_object() && r.result.contains("certificate") && r.result["certificate"].contains("theorem_tag"))
      os << "  [" << r.result["certificate"]["theorem_tag"].get<std::string>() << "]";
    if (r.wall_ms) os << "  (" << *r.wall_ms << " ms)";
    os << "\n";
    for (const auto& h : r.transcript)
      os << "     " << (h.passed ? "[x] " : "[ ] ") << h.name << (h.detail.empty() ? "" : ": " + h.detail) << "\n";
    if (r.error) os << "     error: " << *r.error << "\n";
    for (const auto& e : r.expectations)
      if (!e.ok) os << "     " << e.key << ": expected " << e.expected << ", got " << e.actual << "\n";
    if (!r.ok()) ++failed;
  }
  os << reports.size() << " report(s), " << failed << " failed\n";
  return os.str();
}

}  // namespace dkit::script
