#include "dalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <optional>
#include <ostream>

#include "dalg/error.hpp"
#include "dalg/ideals.hpp"
#include "dalg/structure.hpp"
#include "dalg/text.hpp"

namespace dalg::cli {

namespace {

using json = nlohmann::ordered_json;

json var_json(const DerivVar& v, const DiffRing& ring) {
  return {{"text", to_text(v, ring)}, {"var", v.var}, {"alpha", v.op.exponents(ring.m())}};
}

json poly_json(const DiffPoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : t.mono.factors())
      mono.push_back({{"var", v.var}, {"alpha", v.op.exponents(f.ring().m())}, {"exp", e}});
    terms.push_back({{"coeff", to_text(t.coeff, f.base())}, {"monomial", mono}});
  }
  return {{"text", to_text(f)}, {"terms", terms}};
}

json polys_json(const std::vector<DiffPoly>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(poly_json(f));
  return a;
}

json vars_json(const std::vector<DerivVar>& vs, const DiffRing& ring) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(var_json(v, ring));
  return a;
}

json saturation_json(const SaturationResult& r) {
  json j{{"verdict", to_string(r.verdict)}, {"order", r.order}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  j["generators"] = r.num_generators;
  j["variables"] = r.num_variables;
  return j;
}

json h_exponents_json(const HExponents& h) {
  json a = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) a.push_back({{"element", i}, {"I", h[i].first}, {"S", h[i].second}});
  return a;
}

json header(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

DerivVar parse_var(const std::string& text, const DiffRingPtr& ring) {
  const DiffPoly f = parse_poly(text, ring);
  if (f.is_constant() || !(f == DiffPoly::variable(ring, leader(f))))
    throw Error(ErrorCode::SyntaxError, "expected a single derivative: " + text);
  return leader(f);
}

std::vector<DiffPoly> parse_all(const std::vector<std::string>& texts, const DiffRingPtr& ring) {
  std::vector<DiffPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

BaseKind parse_kind(const std::string& s) {
  if (s == "rationals") return BaseKind::Rationals;
  if (s == "prime-field") return BaseKind::PrimeField;
  if (s == "rational-functions") return BaseKind::RationalFunctions;
  throw Error(ErrorCode::InvalidRing, "unknown base kind: " + s);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential polynomial algebra over Q, F_p and rational function fields", "dalg"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, kind;
  std::optional<std::uint64_t> characteristic;
  std::optional<std::uint32_t> m_opt, n_opt;
  std::optional<std::size_t> budget;
  app.add_option("--config", config_path, "Ring configuration file (key = value lines)");
  app.add_option("--characteristic", characteristic, "Characteristic of the base ring");
  app.add_option("--kind", kind, "rationals, prime-field or rational-functions");
  app.add_option("-m,--derivations", m_opt, "Number of derivations");
  app.add_option("-n,--indeterminates", n_opt, "Number of differential indeterminates");
  app.add_option("--budget", budget, "Step budget for reductions and Groebner computations");

  std::string poly_a, poly_b;
  std::vector<std::string> list_a, list_b, list_c;
  std::string h_text = "1";
  std::optional<std::uint32_t> order_k;
  bool partial = false, certificate = false, strict = false;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  std::string input_path;

  auto* rank = app.add_subcommand("rank", "Leader, rank tuple, initial and separant");
  rank->add_option("poly", poly_a)->required();

  auto* reduce = app.add_subcommand("reduce", "Ritt-Kolchin reduction with certificate");
  reduce->add_option("poly", poly_a)->required();
  reduce->add_option("--by", list_a, "Elements of the autoreduced set");
  reduce->add_flag("--partial", partial, "Partial reduction only");
  reduce->add_flag("--certificate", certificate, "Include the multipliers and trace");

  auto* charset = app.add_subcommand("charset", "Ritt-Wu characteristic set");
  charset->add_option("polys", list_a);

  auto* delta = app.add_subcommand("delta", "Delta-polynomial of two polynomials");
  delta->add_option("f", poly_a)->required();
  delta->add_option("g", poly_b)->required();

  auto* member = app.add_subcommand("member", "Truncated saturation membership");
  member->add_option("poly", poly_a)->required();
  member->add_option("--gens", list_a, "Differential generators (prolonged)");
  member->add_option("--algebraic", list_b, "Generators joined without prolongation");
  member->add_option("--H", h_text, "Saturating element");
  member->add_option("--order-k", order_k, "Prolongation order");
  member->add_flag("--strict", strict, "Exit 1 on a negative verdict");

  auto* coherent = app.add_subcommand("coherent", "Coherence of an autoreduced set relative to an ideal");
  coherent->add_option("G", list_a);
  coherent->add_option("--aux", list_b, "Generators of the ideal");
  coherent->add_option("--order-k", order_k, "Prolongation order");
  coherent->add_flag("--strict", strict, "Exit 1 when not coherent");

  auto* structure = app.add_subcommand("structure", "Structure decomposition and claim checks");
  structure->add_option("--input", input_path, "Input file: ring keys plus gen, extra and sample lines");
  structure->add_option("--order-k", order_k, "Prolongation order");
  structure->add_option("--samples", samples, "Random samples per sampled claim");
  structure->add_option("--seed", seed, "Random seed");
  structure->add_flag("--strict", strict, "Exit 1 when a claim check fails");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    SessionConfig cfg;
    if (!input_path.empty())
      cfg = load_config(input_path);
    else if (!config_path.empty())
      cfg = load_config(config_path);
    if (characteristic) {
      cfg.spec.characteristic = *characteristic;
      if (kind.empty() && *characteristic != 0 && cfg.spec.kind == BaseKind::Rationals)
        cfg.spec.kind = BaseKind::PrimeField;
    }
    if (!kind.empty()) cfg.spec.kind = parse_kind(kind);
    if (m_opt) cfg.spec.num_derivations = *m_opt;
    if (n_opt) cfg.n = *n_opt;
    const DiffRingPtr ring = cfg.ring();

    ReduceOptions ropts;
    CharsetOptions copts;
    SaturationOptions sopts;
    if (budget) {
      ropts.max_steps = *budget;
      copts.reduce.max_steps = *budget;
      sopts.groebner.max_pairs = *budget;
    }

    json j;
    int code = kOk;
    if (rank->parsed()) {
      const DiffPoly f = parse_poly(poly_a, ring);
      j = header("rank");
      j["input"] = poly_json(f);
      if (f.is_constant()) {
        j["leader"] = nullptr;
        j["rank"] = nullptr;
        j["initial"] = nullptr;
        j["separant"] = nullptr;
      } else {
        j["leader"] = var_json(leader(f), *ring);
        j["rank"] = rank_of_poly(f).tuple();
        j["initial"] = poly_json(initial(f));
        j["separant"] = poly_json(separant(f));
      }
    } else if (reduce->parsed()) {
      const DiffPoly f = parse_poly(poly_a, ring);
      const AutoreducedSet G(parse_all(list_a, ring));
      const ReductionCertificate cert = partial ? partial_reduce(f, G, ropts) : ritt_reduce(f, G, ropts);
      j = header("reduce");
      j["kind"] = partial ? "partial" : "full";
      j["input"] = poly_json(f);
      j["by"] = polys_json(G.elements());
      j["remainder"] = poly_json(cert.remainder);
      j["h_exponents"] = h_exponents_json(cert.h_exponents);
      j["H"] = poly_json(h_element(G, cert.h_exponents, ring));
      j["verified"] = verify_certificate(f, G, cert);
      if (certificate) {
        json mult = json::array();
        for (const auto& [key, c] : cert.multipliers)
          mult.push_back({{"theta", key.first.exponents(ring->m())}, {"element", key.second}, {"multiplier", poly_json(c)}});
        json trace = json::array();
        for (const auto& r : cert.trace) trace.push_back(r.tuple());
        j["certificate"] = {{"multipliers", mult}, {"trace", trace},
                            {"max_prolongation_order", cert.max_prolongation_order()}};
      }
    } else if (charset->parsed()) {
      const auto F = parse_all(list_a.empty() ? cfg.generators : list_a, ring);
      const CharsetResult res = ritt_wu_charset(F, copts);
      j = header("charset");
      j["input"] = polys_json(F);
      j["charset"] = polys_json(res.charset.elements());
      j["unit"] = res.nonzero_constant_remainder;
      j["constant_remainder"] = res.constant_remainder ? poly_json(*res.constant_remainder) : json(nullptr);
      j["separant_remainder_nonzero"] = res.separant_remainder_nonzero;
      json iters = json::array();
      for (const auto& it : res.trace) {
        json ar = json::array();
        for (const auto& r : it.rank.prefix()) ar.push_back(r.tuple());
        iters.push_back({{"auto_rank", ar}, {"set_size", it.set_size}, {"adjoined", it.adjoined}});
      }
      j["iterations"] = iters;
    } else if (delta->parsed()) {
      const DiffPoly f = parse_poly(poly_a, ring), g = parse_poly(poly_b, ring);
      const auto d = delta_polynomial(f, g);
      j = header("delta");
      j["f"] = poly_json(f);
      j["g"] = poly_json(g);
      j["delta"] = d ? poly_json(*d) : json(nullptr);
    } else if (member->parsed()) {
      SaturationQuery q;
      q.target = parse_poly(poly_a, ring);
      q.generators = parse_all(list_a.empty() ? cfg.generators : list_a, ring);
      q.algebraic_generators = parse_all(list_b, ring);
      q.H = parse_poly(h_text, ring);
      std::vector<DiffPoly> all = q.generators;
      all.push_back(q.target);
      q.k = order_k.value_or(default_order(all));
      const SaturationResult res = saturation_member(q, sopts);
      j = header("member");
      j["target"] = poly_json(q.target);
      j["generators"] = polys_json(q.generators);
      j["algebraic_generators"] = polys_json(q.algebraic_generators);
      j["H"] = poly_json(q.H);
      j["result"] = saturation_json(res);
      if (strict && res.verdict != Verdict::Yes) code = kNegative;
    } else if (coherent->parsed()) {
      const AutoreducedSet G(parse_all(list_a.empty() ? cfg.generators : list_a, ring));
      const auto aux = parse_all(list_b, ring);
      std::vector<DiffPoly> all(G.begin(), G.end());
      all.insert(all.end(), aux.begin(), aux.end());
      const std::uint32_t k = order_k.value_or(default_order(all));
      const CoherenceReport rep = coherence_check(G, aux, k, sopts);
      j = header("coherent");
      j["order"] = rep.order;
      j["G"] = polys_json(G.elements());
      j["aux"] = polys_json(aux);
      j["aux_partially_reduced"] = rep.aux_partially_reduced;
      json pa = json::array();
      for (const auto& v : rep.prolonged_aux)
        pa.push_back({{"aux", v.aux_index}, {"theta", v.theta.exponents(ring->m())}, {"result", saturation_json(v.result)}});
      j["prolonged_aux"] = pa;
      json pairs = json::array();
      for (const auto& p : rep.pairs)
        pairs.push_back({{"first", p.first}, {"second", p.second}, {"delta", poly_json(p.delta)},
                         {"restricted_generators", p.restricted_generators}, {"result", saturation_json(p.result)}});
      j["pairs"] = pairs;
      j["coherent"] = rep.coherent;
      if (strict && !rep.coherent) code = kNegative;
    } else if (structure->parsed()) {
      const auto gens = parse_all(cfg.generators, ring);
      std::vector<DerivVar> extras;
      for (const auto& e : cfg.extras) extras.push_back(parse_var(e, ring));
      const auto sample_polys = parse_all(cfg.samples, ring);
      const std::uint32_t k = order_k.value_or(default_order(gens));
      StructureOptions stopts;
      stopts.charset = copts;
      stopts.saturation = sopts;
      const StructureDecomposition d = decompose(ring, gens, extras, k, stopts);
      VerifyOptions vopts;
      vopts.seed = seed;
      vopts.claim1_samples = samples;
      vopts.saturation = sopts;
      const VerificationReport rep = verify_claims(d, gens, sample_polys, {}, k, vopts);

      j = header("structure");
      j["order"] = rep.order;
      j["generators"] = polys_json(gens);
      j["decomposition"] = {{"charset", polys_json(d.G.elements())},
                            {"H", poly_json(d.H_poly)},
                            {"Yprime", vars_json(d.Yprime, *ring)},
                            {"V_B", vars_json(d.V_B, *ring)},
                            {"P_vars", vars_json(d.P_vars(k), *ring)},
                            {"P_vars_order_bound", k},
                            {"p1_gens", polys_json(d.p1_gens)}};
      json claims = json::array();
      for (const auto& c : rep.claims) {
        json checks = json::array();
        for (const auto& ch : c.checks)
          checks.push_back({{"subject", ch.subject}, {"passed", ch.passed}, {"evidence", ch.evidence}});
        claims.push_back({{"claim", c.claim},
                          {"statement", c.statement},
                          {"status", to_string(c.status)},
                          {"checks", checks},
                          {"counterexample", c.counterexample ? json(*c.counterexample) : json(nullptr)}});
      }
      j["claims"] = claims;
      json deps = json::array();
      for (const auto& dv : rep.dependences) {
        json point = json::array();
        for (const auto& [v, val] : dv.point)
          point.push_back({{"var", var_json(v, *ring)}, {"value", to_text(val, ring->base())}});
        json r = json::array();
        for (const auto& x : dv.r) r.push_back(to_text(x, ring->base()));
        deps.push_back({{"b", polys_json(dv.instance.b)},
                        {"p", polys_json(dv.instance.p)},
                        {"point_found", dv.point_found},
                        {"point", point},
                        {"r", r},
                        {"specialized", dv.point_found ? poly_json(dv.specialized) : json(nullptr)},
                        {"membership", dv.membership ? saturation_json(*dv.membership) : json(nullptr)}});
      }
      j["dependences"] = deps;
      if (rep.kernel) {
        const auto& kp = *rep.kernel;
        j["kernel_probe"] = {{"b_monomials", kp.b_monomials},     {"p_monomials", kp.p_monomials},
                             {"rank_b", kp.rank_b},               {"rank_products", kp.rank_products},
                             {"kernel_dim", kp.kernel_dim},       {"predicted_kernel_dim", kp.predicted_kernel_dim},
                             {"agrees", kp.agrees}};
      }
      j["passed"] = rep.passed();
      if (strict && !rep.passed()) code = kNegative;
    }
    out << j.dump(2) << "\n";
    return code;
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? kOk : kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace dalg::cli
