#include "cli/commands.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/spec_file.hpp"
#include "frobkit/codes.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/frobenius.hpp"

namespace frobkit::cli {
namespace {

using nlohmann::ordered_json;

struct Invocation {
  std::string command;
  std::vector<std::string> files;
  std::optional<std::string> form_path;
  std::optional<std::string> side;
};

std::string digest(const std::string& command, const std::vector<SourceFile>& files, const std::string& extra = "") {
  std::uint64_t h = fnv1a(command);
  for (const auto& f : files) {
    h = fnv1a(std::string_view("\0", 1), h);
    h = fnv1a(f.text, h);
  }
  if (!extra.empty()) h = fnv1a(extra, fnv1a(std::string_view("\0", 1), h));
  return hex64(h);
}

std::string root(const SourceFile& f) { return f.path + "#"; }

FiniteRing load_ring(const SourceFile& f) { return ring_from_spec(parse_json(f), root(f)); }

ordered_json weights_json(const ZnLinearForm& form) { return form.weights(); }

Report ring_validate(const Invocation& inv) {
  const auto src = read_file(inv.files.at(0));
  const auto spec = parse_json(src);
  Report r(inv.command, digest(inv.command, {src}));
  try {
    const auto ring = ring_from_spec(spec, root(src));
    r.verdict("valid", true);
    for (const char* check : {"well_defined", "associative", "unital", "characteristic_ok"}) r.verdict(check, true);
    r.verdict("characteristic", ring.characteristic());
    r.verdict("size", ring.size());
    r.verdict("orders", ring.shape().orders());
    r.verdict("commutative", ring.is_commutative());
  } catch (const InvalidRing& e) {
    using K = InvalidRing::Kind;
    r.verdict("valid", false, false);
    if (e.kind() == K::group_table) {
      r.verdict("group_table", false, false);
    } else {
      const std::vector<std::pair<const char*, K>> order{{"well_defined", K::well_definedness},
                                                          {"associative", K::associativity},
                                                          {"unital", K::unit},
                                                          {"characteristic_ok", K::characteristic}};
      bool reached = false;
      for (const auto& [name, kind] : order) {
        if (reached) {
          r.verdict(name, "unchecked");
        } else if (kind == e.kind()) {
          r.verdict(name, false, false);
          reached = true;
        } else {
          r.verdict(name, true);
        }
      }
    }
    r.witness("basis_indices", e.witness());
    r.witness("message", e.what());
  } catch (const EnumerationTooLarge&) {
    throw;
  } catch (const InternalConsistency&) {
    throw;
  } catch (const Error& e) {
    r.verdict("valid", false, false);
    r.witness("message", e.what());
  }
  return r;
}

Report ring_frobenius(const Invocation& inv) {
  const auto src = read_file(inv.files.at(0));
  const auto ring = load_ring(src);
  Report r(inv.command, digest(inv.command, {src}));
  const auto eps = find_frobenius_functional(ring);
  const auto socle = is_frobenius_socle(ring);
  const bool agree = eps.has_value() == socle.frobenius;
  r.verdict("frobenius", eps.has_value() && socle.frobenius, eps.has_value() && socle.frobenius);
  r.verdict("functional_found", eps.has_value());
  r.verdict("socle_frobenius", socle.frobenius);
  r.verdict("agreement", agree, agree);
  r.witness("functional_weights", eps ? weights_json(eps->form()) : ordered_json());
  r.witness("radical_size", socle.radical_size);
  r.witness("right_socle_size", socle.right_socle_size);
  r.witness("left_socle_size", socle.left_socle_size);
  r.witness("right_socle_generator", socle.right_witness ? element_json(*socle.right_witness) : ordered_json());
  r.witness("left_socle_generator", socle.left_witness ? element_json(*socle.left_witness) : ordered_json());
  return r;
}

CodeSide parse_side(const std::string& s) { return s == "right" ? CodeSide::right : CodeSide::left; }

Report code_command(const Invocation& inv, const std::string& verb) {
  std::vector<SourceFile> sources{read_file(inv.files.at(0)), read_file(inv.files.at(1))};
  if (inv.form_path) sources.push_back(read_file(*inv.form_path));
  const auto ring = load_ring(sources[0]);
  const auto spec = code_from_spec(parse_json(sources[1]), ring, root(sources[1]));
  const CodeSide side = inv.side ? parse_side(*inv.side) : spec.side.value_or(CodeSide::left);
  const auto code = generate(ring, spec.length, spec.generators, side);

  std::optional<AmbientForm> form;
  if (inv.form_path) {
    auto matrix = form_from_spec(parse_json(sources[2]), ring, root(sources[2]));
    if (matrix.size() != spec.length)
      throw InvalidArgument("form is " + std::to_string(matrix.size()) + " x " + std::to_string(matrix.size()) +
                            " but the code has length " + std::to_string(spec.length));
    form.emplace(ring, std::move(matrix));
  } else {
    form.emplace(AmbientForm::identity(ring, spec.length));
  }

  Report r(inv.command, digest(inv.command, sources, to_string(side)));
  r.verdict("code_side", to_string(side));
  r.verdict("code_size", code.size());
  if (verb == "wenum") {
    const auto w = weight_enumerator(code);
    r.verdict("enumerator", w.to_string());
    r.verdict("counts", w.counts);
    return r;
  }
  if (verb == "dual") {
    const Side dual_side = side == CodeSide::right ? Side::left : Side::right;
    const auto d = dual(code, *form, dual_side);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < spec.length; ++i) total *= ring.size();
    const bool identity = code.size() * d.size() == total;
    r.verdict("dual_side", to_string(d.side()));
    r.verdict("dual_size", d.size());
    r.verdict("cardinality_identity", identity, identity);
    auto words = ordered_json::array();
    for (const auto& w : d.codewords()) words.push_back(word_json(ring, w, spec.length));
    r.witness("dual_codewords", std::move(words));
    return r;
  }
  const auto res = macwilliams_holds(code, *form);
  r.verdict("identity", res.holds ? "HOLDS" : "FAILS", res.holds);
  r.verdict("monomial", res.monomial);
  r.verdict("code_enumerator", res.code_enumerator.to_string());
  r.verdict("dual_enumerator", res.dual_enumerator.to_string());
  r.verdict("transformed", res.transformed ? ordered_json(res.transformed->to_string()) : ordered_json("non-integral"));
  r.verdict("dual_size", res.dual_code.size());
  return r;
}

Report skew_command(const Invocation& inv, const std::string& verb) {
  const auto src = read_file(inv.files.at(0));
  auto spec = skew_from_spec(parse_json(src), root(src));
  Report r(inv.command, digest(inv.command, {src}));
  r.verdict("sigma_order", spec.sigma.order());

  if (verb == "build") {
    const auto check = check_two_sided(spec.base, spec.sigma, spec.f);
    r.verdict("two_sided", check.two_sided, check.two_sided);
    const bool unit = is_unit(spec.base, spec.f.front());
    r.verdict("constant_term_unit", unit, unit);
    if (!check.two_sided) {
      if (check.commutation_witness)
        r.witness("commutation", ordered_json{{"basis_index", check.commutation_witness->first},
                                              {"coefficient", check.commutation_witness->second}});
      if (check.shift_witness) r.witness("shift_coefficient", *check.shift_witness);
      r.witness("detail", check.detail);
      return r;
    }
    if (!unit) return r;
    const SkewQuotient q(spec.sigma, spec.f);
    const auto ring = as_finite_ring(q);
    r.verdict("degree", q.degree());
    r.verdict("size", ring.size());
    r.witness("ring", ring_to_spec(ring));
    return r;
  }

  const SkewQuotient q(spec.sigma, spec.f);
  const auto ring = as_finite_ring(q);
  const auto base_eps = find_frobenius_functional(q.base());
  r.verdict("base_frobenius", base_eps.has_value(), base_eps.has_value());
  if (!base_eps) return r;
  r.witness("base_functional_weights", weights_json(base_eps->form()));

  if (verb == "frobenius") {
    const auto eps = frobenius_form_on_quotient(q, *base_eps);
    const bool nondegenerate = is_nondegenerate(ring, eps.form(), PairingSide::both);
    const bool socle = is_frobenius_socle(ring).frobenius;
    r.verdict("form_nondegenerate", nondegenerate, nondegenerate);
    r.verdict("socle_frobenius", socle, socle);
    r.witness("quotient_functional_weights", weights_json(eps.form()));
    return r;
  }

  if (!q.is_x_m_minus_one()) throw Unsupported("sweep needs f = x^m - 1");
  const auto ideals = enumerate_ideals(ring, Side::left);
  bool all = true;
  auto rows = ordered_json::array();
  for (const auto& ideal : ideals) {
    const auto code = code_from_codewords(q.base(), q.degree(), ideal.elements, CodeSide::left);
    const auto rep = sigma_cyclic_dual_check(code, q, *base_eps);
    all = all && rep.passed();
    rows.push_back(ordered_json{{"size", rep.code_size},
                                {"dual_size", rep.dual_size},
                                {"theta_orthogonal", rep.dual_matches_theta_orthogonal},
                                {"sigma_cyclic", rep.dual_is_sigma_cyclic}});
  }
  r.verdict("left_ideals", ideals.size());
  r.verdict("all_passed", all, all);
  r.witness("ideals", std::move(rows));
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Frobenius rings, ring-linear codes and their duals", "frobkit"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  std::uint64_t cap = 0;
  app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_flag("--timing", timing, "Add elapsed time to the report (breaks byte-identical output)");
  app.add_option("--cap", cap, "Largest exhaustive enumeration allowed")->check(CLI::PositiveNumber);

  Invocation inv;
  std::string file_a, file_b;
  std::string form_path, side;

  auto* ring = app.add_subcommand("ring", "Check a ring spec")->require_subcommand(1)->fallthrough();
  auto* ring_validate_cmd = ring->add_subcommand("validate", "Validate the ring axioms")->fallthrough();
  auto* ring_frobenius_cmd =
      ring->add_subcommand("frobenius", "Run the functional and socle Frobenius tests")->fallthrough();
  for (auto* c : {ring_validate_cmd, ring_frobenius_cmd}) c->add_option("ring", file_a, "Ring spec file")->required();

  auto* code = app.add_subcommand("code", "Codes over a ring")->require_subcommand(1)->fallthrough();
  code->add_option("--form", form_path, "Form matrix file (identity by default)");
  code->add_option("--side", side, "Side the code is closed under")->check(CLI::IsMember({"left", "right"}));
  std::vector<CLI::App*> code_cmds{code->add_subcommand("dual", "Dual code and the cardinality identity"),
                                   code->add_subcommand("wenum", "Hamming weight enumerator"),
                                   code->add_subcommand("macwilliams", "Check the MacWilliams identity")};
  for (auto* c : code_cmds) {
    c->fallthrough();
    c->add_option("ring", file_a, "Alphabet ring spec file")->required();
    c->add_option("code", file_b, "Code spec file")->required();
  }

  auto* skew = app.add_subcommand("skew", "Skew polynomial quotients")->require_subcommand(1)->fallthrough();
  std::vector<CLI::App*> skew_cmds{skew->add_subcommand("build", "Two-sidedness check and table export"),
                                   skew->add_subcommand("frobenius", "Frobenius form on the quotient"),
                                   skew->add_subcommand("sweep", "Sigma-cyclic duality on every left ideal")};
  for (auto* c : skew_cmds) {
    c->fallthrough();
    c->add_option("spec", file_a, "skew_quotient spec file")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
  }

  std::string group, verb;
  for (auto* g : {ring, code, skew})
    if (g->parsed())
      for (auto* leaf : g->get_subcommands()) {
        group = g->get_name();
        verb = leaf->get_name();
      }
  inv.command = group + " " + verb;
  inv.files.push_back(file_a);
  if (group == "code") inv.files.push_back(file_b);
  if (!form_path.empty()) inv.form_path = form_path;
  if (!side.empty()) inv.side = side;

  try {
    std::optional<ScopedEnumerationCap> scoped_cap;
    if (cap > 0) scoped_cap.emplace(cap);
    const auto start = std::chrono::steady_clock::now();
    Report report = group == "ring"   ? (verb == "validate" ? ring_validate(inv) : ring_frobenius(inv))
                    : group == "code" ? code_command(inv, verb)
                                      : skew_command(inv, verb);
    if (timing)
      report.timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    out << report.render(as_json);
    return report.exit_code();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << " (raise it with --cap)\n";
    return 2;
  } catch (const InternalConsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace frobkit::cli
