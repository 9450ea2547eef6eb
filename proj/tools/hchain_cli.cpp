// Command-line front end for the hchain library.
//
//   hchain chamber    --type "1,1,1;3,1,0"
//   hchain classify   --type "1,1,1;3,1,0" --alpha "2,3"
//   hchain stability  --type "1,1,1;3,1,0" --alpha "3,4" [--phi "1,1"]
//   hchain graduation --type "1,1,1;3,1,0" --alpha "1,4"
//   hchain moduli     --type "1,1,1;3,1,0" --genus 0 --alpha "3,4"
//   hchain git        --type "1,1,1;3,1,0" --genus 0 --chars "0,5" [--alpha "1,4"]
//   hchain sweep      --type "1,1,1;3,1,0" --samples 100 --seed 7
//   hchain selfcheck  --seed 7
//
// Exit status: 0 on success, 2 on invalid input, 1 when selfcheck finds a failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hchain/hchain.hpp"
#include "hchain/json_io.hpp"
#include "hchain/parse.hpp"
#include "hchain/sampling.hpp"
#include "hchain/selfcheck.hpp"

namespace {

using hchain::json_io::Json;

struct Options {
  std::string type;
  std::string alpha;
  std::string phi;
  std::string chars;
  std::int64_t genus = 0;
  std::string output = "json";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t rounds = 50;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

std::string join(const hchain::RationalVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << hchain::to_string(v[i]);
  out << ')';
  return out.str();
}

// Default flags: phi_i nonzero wherever the degrees allow it.
hchain::RankOneChain chain_from(const Options& o) {
  const hchain::ChainType t = hchain::parse_chain_type(o.type);
  if (!t.is_rank_one()) throw hchain::UnsupportedError("stability queries need a rank-one type (all ranks 1)");
  std::vector<bool> phi;
  if (o.phi.empty()) {
    for (auto drop : t.degree_drops()) phi.push_back(drop >= 0);
  } else {
    phi = hchain::parse_flags(o.phi);
  }
  return hchain::RankOneChain(t.degrees(), phi);
}

void emit(const Options& o, const Json& json, const std::string& text) {
  if (o.output == "json") std::cout << json.dump() << '\n';
  else std::cout << text;
}

std::string moduli_text(const hchain::ModuliDescriptor& m) {
  std::ostringstream out;
  out << "kind: " << hchain::kind_name(m.kind) << '\n';
  out << "base: Pic product, genus " << m.base.genus << ", dimension " << m.base.dimension << '\n';
  for (const auto& f : m.factors) {
    out << "  factor " << f.index << ": ";
    if (f.skipped) out << "collapsed to base\n";
    else if (f.fiber_dim) out << "P^" << *f.fiber_dim << "-bundle\n";
    else out << "stratified\n";
  }
  for (const auto& s : m.strata) {
    out << "  stratum r=(";
    for (std::size_t i = 0; i < s.section_indices.size(); ++i)
      out << (i ? "," : "") << s.section_indices[i] << (s.bn_number_ok[i] ? "" : "*");
    out << ")\n";
  }
  out << "dimension: " << (m.dimension ? std::to_string(*m.dimension) : "undefined") << '\n';
  out << "euler characteristic: " << m.euler_characteristic << '\n';
  for (const auto& note : m.notes) out << "note: " << note << '\n';
  return out.str();
}

int run_chamber(const Options& o) {
  const auto cone = hchain::build_cone(hchain::parse_chain_type(o.type));
  std::ostringstream text;
  for (std::size_t i = 0; i < cone.n(); ++i)
    text << "wall " << i + 1 << ": " << join(cone.functional(i)) << " . alpha < " << hchain::to_string(cone.constants()[i])
         << '\n';
  text << "vertex: " << join(cone.vertex().entries()) << '\n';
  text << "determinant: " << hchain::to_string(hchain::det(cone.coeff_matrix())) << " (closed form "
       << hchain::to_string(hchain::closed_form_determinant(cone.type())) << ")\n";
  emit(o, hchain::json_io::cone_report(cone), text.str());
  return 0;
}

int run_classify(const Options& o) {
  const auto cone = hchain::build_cone(hchain::parse_chain_type(o.type));
  const auto c = hchain::classify(cone, hchain::parse_alpha(o.alpha));
  std::string text = std::string(hchain::kind_name(c.kind));
  if (c.is_wall()) text += " " + join(c.active_walls);
  emit(o, hchain::json_io::chamber_report(c), text + "\n");
  return 0;
}

int run_stability(const Options& o) {
  const auto chain = chain_from(o);
  const auto v = hchain::is_semistable(chain, hchain::parse_alpha(o.alpha));
  std::ostringstream text;
  text << (v.stable ? "stable" : v.semistable ? "semistable, not stable" : "not semistable") << '\n';
  for (const auto& s : v.tight) text << "  equal slope: " << join(s.indices()) << '\n';
  if (v.violating) text << "  destabilising: " << join(v.violating->indices()) << '\n';
  emit(o, hchain::json_io::verdict_report(v), text.str());
  return 0;
}

int run_graduation(const Options& o) {
  const auto chain = chain_from(o);
  const auto g = hchain::graduation(chain, hchain::parse_alpha(o.alpha));
  std::ostringstream text;
  text << "wall set: " << join(g.wall_set) << "\npsi nonzero: ";
  for (bool b : g.representative.phi_nonzero()) text << (b ? '1' : '0');
  text << "\nfactor slopes: " << join(g.factor_slopes) << '\n';
  emit(o, hchain::json_io::graduation_report(g), text.str());
  return 0;
}

int run_moduli(const Options& o) {
  const auto m = hchain::describe_moduli(hchain::parse_chain_type(o.type), hchain::CurveContext(o.genus),
                                         hchain::parse_alpha(o.alpha));
  emit(o, hchain::json_io::moduli_report(m), moduli_text(m));
  return 0;
}

int run_git(const Options& o) {
  const auto t = hchain::parse_chain_type(o.type);
  const hchain::CurveContext ctx(o.genus);
  const auto k = hchain::parse_characters(o.chars);
  const auto m = hchain::quotient_descriptor(t, ctx, k);
  const auto cls = hchain::classify_character(k);
  std::optional<bool> matches;
  if (!o.alpha.empty()) matches = hchain::correspondence_check(t, ctx, k, hchain::parse_alpha(o.alpha));
  std::string text = std::string("class: ") + hchain::json_io::character_class_name(cls) + " " + join(cls.zero_set) + "\n" +
                     moduli_text(m);
  if (matches) text += std::string("matches alpha: ") + (*matches ? "yes" : "no") + "\n";
  emit(o, hchain::json_io::git_report(cls, m, matches), text);
  return 0;
}

// Trace of random parameters around the cone, with the stability verdict for
// the chain given by --type/--phi.
int run_sweep(const Options& o) {
  const auto chain = chain_from(o);
  const auto cone = hchain::build_cone(chain.type());
  hchain::Sampler rng(o.seed);
  Json samples = Json::array();
  std::ostringstream text;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const auto alpha = rng.alpha_mixed(cone);
    const auto cls = hchain::classify(cone, alpha);
    const auto v = hchain::is_semistable(chain, alpha);
    samples.push_back(Json{{"alpha", hchain::json_io::rational_array(alpha.entries())},
                           {"kind", hchain::kind_name(cls.kind)},
                           {"active_walls", cls.active_walls},
                           {"stable", v.stable},
                           {"semistable", v.semistable}});
    text << join(alpha.entries()) << ' ' << hchain::kind_name(cls.kind) << ' ' << join(cls.active_walls)
         << (v.stable ? " stable" : v.semistable ? " semistable" : " unstable") << '\n';
  }
  emit(o, Json{{"seed", o.seed}, {"samples", samples}}, text.str());
  return 0;
}

int run_selfcheck(const Options& o) {
  const auto report = hchain::run_selfcheck(o.seed, o.rounds);
  Json suites = Json::array();
  std::ostringstream text;
  for (const auto& s : report.suites) {
    suites.push_back(Json{{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}});
    text << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.passed << " passed, " << s.failed
         << " failed\n";
  }
  emit(o, Json{{"seed", o.seed}, {"ok", report.ok()}, {"suites", suites}}, text.str());
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability chambers, graduations and moduli descriptors for holomorphic chains"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "chain type \"r0,...,rn;d0,...,dn\"")->required();
  };
  auto add_alpha = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", o.alpha, "parameter \"a1,...,an\" (entries p or p/q)");
    if (required) opt->required();
  };
  auto add_phi = [&](CLI::App* sub) {
    sub->add_option("--phi", o.phi, "map flags \"1,0,...\" (default: nonzero wherever degrees allow)");
  };
  auto add_genus = [&](CLI::App* sub) { sub->add_option("--genus", o.genus, "curve genus g >= 0")->required(); };

  app.add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* chamber = app.add_subcommand("chamber", "stability cone H: walls, vertex, determinant");
  add_type(chamber);
  auto* classify = app.add_subcommand("classify", "locate alpha: interior, wall set C_I, or outside");
  add_type(classify);
  add_alpha(classify, true);
  auto* stability = app.add_subcommand("stability", "alpha-(semi)stability of a rank-one chain");
  add_type(stability);
  add_alpha(stability, true);
  add_phi(stability);
  auto* grad = app.add_subcommand("graduation", "S-equivalence representative on a wall");
  add_type(grad);
  add_alpha(grad, true);
  add_phi(grad);
  auto* moduli = app.add_subcommand("moduli", "symbolic moduli descriptor");
  add_type(moduli);
  add_genus(moduli);
  add_alpha(moduli, true);
  auto* git = app.add_subcommand("git", "character-side quotient and its chamber");
  add_type(git);
  add_genus(git);
  git->add_option("--chars", o.chars, "characters \"k1,...,kn\"")->required();
  add_alpha(git, false);
  auto* sweep = app.add_subcommand("sweep", "random parameter trace for one chain");
  add_type(sweep);
  add_phi(sweep);
  sweep->add_option("--samples", o.samples, "number of parameters");
  sweep->add_option("--seed", o.seed, "random seed");
  auto* selfcheck = app.add_subcommand("selfcheck", "randomised identity checks");
  selfcheck->add_option("--seed", o.seed, "random seed");
  selfcheck->add_option("--rounds", o.rounds, "samples per suite");

  // Allow --output after the subcommand too.
  for (auto* sub : {chamber, classify, stability, grad, moduli, git, sweep, selfcheck})
    sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*chamber) return run_chamber(o);
    if (*classify) return run_classify(o);
    if (*stability) return run_stability(o);
    if (*grad) return run_graduation(o);
    if (*moduli) return run_moduli(o);
    if (*git) return run_git(o);
    if (*sweep) return run_sweep(o);
    if (*selfcheck) return run_selfcheck(o);
  } catch (const hchain::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
