// dp2: command-line front end for the degree-2 del Pezzo toolkit.
//
// Exit status: 0 success, 1 hard failure, 2 usage or input error.
// DP2_VERBOSE=1 adds descriptions and references to text claim reports.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dp2/chern.hpp"
#include "dp2/cohom.hpp"
#include "dp2/divisor_parse.hpp"
#include "dp2/error.hpp"
#include "dp2/galois.hpp"
#include "dp2/json_io.hpp"
#include "dp2/les.hpp"
#include "dp2/order.hpp"
#include "dp2/picard.hpp"
#include "dp2/replay.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

bool verbose_from_env() {
  const char* v = std::getenv("DP2_VERBOSE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int report_claims(const std::vector<dp2::ClaimReport>& reports, bool as_json) {
  const bool verbose = verbose_from_env();
  for (const auto& r : reports) {
    if (as_json)
      emit(dp2::to_json(r));
    else
      std::cout << dp2::to_text(r, verbose) << '\n';
  }
  const std::size_t failures = dp2::hard_failures(reports);
  if (!as_json) {
    std::size_t passed = 0, notes = 0;
    for (const auto& r : reports) {
      passed += r.pass;
      notes += !r.pass && !r.hard_failure();
    }
    std::cout << reports.size() << " claims: " << passed << " passed, " << failures << " failed, " << notes
              << " known discrepancies\n";
  }
  return failures == 0 ? kOk : kFailure;
}

std::string curve_name_or(const dp2::DivClass& d, const std::string& fallback) {
  const auto c = dp2::classify(d);
  return c ? c->name() : fallback;
}

// "r,c1,c2" where c1 may itself contain commas (raw vector form).
dp2::ChernChar parse_chern(const std::string& text) {
  const auto first = text.find(',');
  const auto last = text.rfind(',');
  if (first == std::string::npos || first == last)
    throw dp2::ParseError("expected 'rank,c1,c2', got '" + text + "'");
  try {
    const std::int64_t rank = std::stoll(text.substr(0, first));
    const std::int64_t c2 = std::stoll(text.substr(last + 1));
    return dp2::ch_of(rank, dp2::parse_divisor(text.substr(first + 1, last - first - 1)), c2);
  } catch (const std::logic_error&) {
    throw dp2::ParseError("expected integer rank and c2 in '" + text + "'");
  }
}

// "E1;L12" or "E1 + L12 ; E3"
dp2::SplitBundle parse_split(const std::string& text) {
  dp2::SplitBundle b;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(';', start);
    b.summands.push_back(dp2::parse_divisor(text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return b;
}

json cohom_json(const dp2::DivClass& d) {
  const auto c = dp2::cohom_dims(d);
  json j = {{"class", d}, {"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2}, {"chi", dp2::chi_line(d)}, {"witness", nullptr}};
  if (const auto w = dp2::noneffective_witness(d)) j["witness"] = dp2::to_symbolic_string(w->witness);
  return j;
}

json pair_trail(const dp2::CohClassVec& v, const dp2::ExceptionalCurve& a, const dp2::ExceptionalCurve& b) {
  const dp2::DivClass diff = a.cls - b.cls;
  return {{"class", v.to_string()},
          {"e", a.name()},
          {"eprime", b.name()},
          {"difference", diff},
          {"class_of_difference", dp2::class_of(diff).to_string()},
          {"intersection", dp2::intersect(a.cls, b.cls)},
          {"verified", dp2::class_of(diff) == v}};
}

void print_trail(const json& t) {
  std::cout << "class " << t["class"].get<std::string>() << " = [" << t["e"].get<std::string>() << " - "
            << t["eprime"].get<std::string>() << "]\n"
            << "  difference " << t["difference"].dump() << " -> " << t["class_of_difference"].get<std::string>()
            << ", E.E' = " << t["intersection"].get<std::int64_t>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, cohomology and Ext-dimension computations on a degree-2 del Pezzo surface", "dp2"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  int status = kOk;

  // picard
  auto* picard = app.add_subcommand("picard", "Picard lattice and exceptional curves")->require_subcommand(1);
  auto* p_curves = picard->add_subcommand("curves", "List the 56 exceptional curves");
  p_curves->callback([&] {
    for (const auto& c : dp2::exceptional_curves()) {
      if (as_json)
        emit(json(c));
      else
        std::cout << c.name() << '\t' << dp2::to_vector_string(c.cls) << '\n';
    }
  });
  std::string p_div;
  auto* p_classify = picard->add_subcommand("classify", "Classify a divisor class");
  p_classify->add_option("divisor", p_div, "Divisor class")->required();
  p_classify->callback([&] {
    const auto d = dp2::parse_divisor(p_div);
    const auto c = dp2::classify(d);
    if (as_json)
      emit({{"class", d}, {"family", c ? json(c->name()) : json("NotExceptional")}});
    else
      std::cout << (c ? c->name() : "NotExceptional") << '\n';
  });

  // galois
  auto* galois = app.add_subcommand("galois", "Geiser involution and H^1(Z/2, Pic Y)")->require_subcommand(1);
  galois->add_subcommand("h1", "Elementary divisors of H^1")->callback([&] {
    const auto d = dp2::h1_galois();
    if (as_json) {
      emit({{"elementary_divisors", d}});
    } else {
      for (std::size_t k = 0; k < d.size(); ++k) std::cout << (k ? " x " : "") << "Z/" << d[k];
      std::cout << '\n';
    }
  });
  std::string g_div;
  auto* g_class = galois->add_subcommand("class", "Class in H^1 of a cocycle");
  g_class->add_option("divisor", g_div, "Divisor class in ker(1 + sigma)")->required();
  g_class->callback([&] {
    const auto d = dp2::parse_divisor(g_div);
    const auto v = dp2::class_of(d);
    if (as_json)
      emit({{"class", d}, {"h1_class", v.to_string()}, {"coboundary", v.is_zero()}});
    else
      std::cout << v.to_string() << '\n';
  });
  std::string g_bits;
  auto* g_rep = galois->add_subcommand("represent", "Represent a class as [E - E']");
  g_rep->add_option("bits", g_bits, "Six coefficients of e1..e6, e.g. 101000")->required();
  g_rep->callback([&] {
    const auto v = dp2::CohClassVec::parse(g_bits);
    const auto [a, b] = dp2::represent_as_difference(v);
    json out = {{"difference", pair_trail(v, a, b)}};
    if (!v.is_zero()) {
      const auto [da, db] = dp2::disjoint_representative(v);
      out["disjoint"] = pair_trail(v, da, db);
    }
    if (as_json) {
      emit(out);
    } else {
      print_trail(out["difference"]);
      if (out.contains("disjoint")) {
        std::cout << "disjoint representative:\n";
        print_trail(out["disjoint"]);
      }
    }
  });

  // cohom
  auto* cohom = app.add_subcommand("cohom", "Line-bundle cohomology on Y")->require_subcommand(1);
  std::string c_div;
  auto* c_dims = cohom->add_subcommand("dims", "h0, h1, h2 of O(D)");
  c_dims->add_option("divisor", c_div, "Divisor class")->required();
  c_dims->callback([&] {
    const auto j = cohom_json(dp2::parse_divisor(c_div));
    if (as_json)
      emit(j);
    else
      std::cout << "h0=" << j["h0"] << " h1=" << j["h1"] << " h2=" << j["h2"] << " chi=" << j["chi"] << '\n';
  });
  auto* c_h0 = cohom->add_subcommand("h0", "h0 of O(D) by base-locus peeling");
  c_h0->add_option("divisor", c_div, "Divisor class")->required();
  c_h0->callback([&] {
    const auto d = dp2::parse_divisor(c_div);
    if (as_json)
      emit({{"class", d}, {"h0", dp2::h0(d)}});
    else
      std::cout << dp2::h0(d) << '\n';
  });
  auto* c_wit = cohom->add_subcommand("witness", "Moving class certifying that |D| is empty");
  c_wit->add_option("divisor", c_div, "Divisor class")->required();
  c_wit->callback([&] {
    const auto d = dp2::parse_divisor(c_div);
    const auto w = dp2::noneffective_witness(d);
    if (as_json) {
      json j = {{"class", d}, {"witness", nullptr}};
      if (w) {
        json peeled = json::array();
        for (const auto& c : w->peeled) peeled.push_back(c.name());
        j["witness"] = dp2::to_symbolic_string(w->witness);
        j["peeled"] = peeled;
        j["residual"] = w->residual;
        j["degree"] = dp2::intersect(w->residual, w->witness);
      }
      emit(j);
    } else if (w) {
      std::cout << "witness " << dp2::to_symbolic_string(w->witness) << ": "
                << dp2::to_symbolic_string(w->witness) << " . " << dp2::to_symbolic_string(w->residual) << " = "
                << dp2::intersect(w->residual, w->witness);
      for (const auto& c : w->peeled) std::cout << " (peeled " << c.name() << ")";
      std::cout << '\n';
    } else {
      std::cout << "no witness\n";
      status = kFailure;
    }
  });
  std::string c_seq;
  auto* c_les = cohom->add_subcommand("les", "Solve an exact sequence of dimensions");
  c_les->add_option("sequence", c_seq, "Comma list, ? for unknowns, e.g. 0,1,?,0")->required();
  c_les->callback([&] {
    const auto seq = dp2::DimSequence::parse(c_seq);
    const auto sol = dp2::les_solve(seq);
    const bool solved = sol.status == dp2::LesStatus::Solved;
    if (as_json) {
      emit({{"input", seq.to_string()}, {"status", solved ? "solved" : "underdetermined"}, {"entries", sol.entries},
            {"ranks", sol.ranks}});
    } else {
      for (std::size_t k = 0; k < sol.entries.size(); ++k) std::cout << (k ? "," : "") << sol.entries[k].to_string();
      std::cout << (solved ? "" : "  (underdetermined)") << '\n';
    }
  });

  // chern
  auto* chern = app.add_subcommand("chern", "Chern characters and the Euler pairing")->require_subcommand(1);
  std::string ch_lhs, ch_rhs;
  auto* ch_pair = chern->add_subcommand("pairing", "chi(lhs, rhs) by Hirzebruch-Riemann-Roch");
  ch_pair->add_option("--lhs", ch_lhs, "rank,c1,c2")->required();
  ch_pair->add_option("--rhs", ch_rhs, "rank,c1,c2")->required();
  ch_pair->callback([&] {
    const auto x = parse_chern(ch_lhs);
    const auto y = parse_chern(ch_rhs);
    const auto chi = dp2::euler_pairing(x, y);
    if (as_json)
      emit({{"lhs", x}, {"rhs", y}, {"product", dp2::mult(dp2::dual(x), y)}, {"chi", chi}});
    else
      std::cout << "ch(lhs)^* ch(rhs) = " << dp2::mult(dp2::dual(x), y) << "\nchi = " << chi << '\n';
  });
  std::string ch_div;
  auto* ch_chi = chern->add_subcommand("chi", "chi(O(D)) through the Todd class");
  ch_chi->add_option("divisor", ch_div, "Divisor class")->required();
  ch_chi->callback([&] {
    const auto d = dp2::parse_divisor(ch_div);
    const auto x = dp2::ch_line(d);
    const auto chi = dp2::integrate_with_todd(x);
    if (as_json)
      emit({{"class", d}, {"ch", x}, {"chi", chi}});
    else
      std::cout << "ch = " << x << "\nchi = " << chi << '\n';
  });

  // order
  auto* order = app.add_subcommand("order", "The cyclic order A = O + O(E - E')_sigma")->require_subcommand(1);
  std::string o_e = "E1", o_eprime = "C12";
  auto* o_model = order->add_subcommand("model", "Show the order model");
  o_model->add_option("--e", o_e, "Exceptional curve E")->capture_default_str();
  o_model->add_option("--eprime", o_eprime, "Exceptional curve E' disjoint from E")->capture_default_str();
  o_model->callback([&] {
    const auto ce = dp2::classify(dp2::parse_divisor(o_e));
    const auto cp = dp2::classify(dp2::parse_divisor(o_eprime));
    if (!ce || !cp) throw dp2::InvalidModel("E and E' must be exceptional curves");
    const auto m = dp2::OrderModel::from_pair(*ce, *cp);
    if (as_json) {
      emit(json(m));
    } else {
      std::cout << "E  = " << m.e.name() << "\nE' = " << m.eprime.name()
                << "\nsigma(E') = " << curve_name_or(dp2::sigma(m.eprime.cls), "?")
                << "\nL = E - E' = " << dp2::to_vector_string(m.lclass) << "  class " << dp2::class_of(m.lclass).to_string()
                << "\nF = E + sigma(E') = " << dp2::to_vector_string(m.f) << "  F^2 = " << dp2::self_intersection(m.f)
                << "  F.H = " << dp2::h_degree(m.f) << '\n';
    }
  });
  std::string o_src, o_tgt;
  bool o_induced = false;
  auto* o_ext = order->add_subcommand("ext", "Ext dimensions between split bundles");
  o_ext->add_option("--src", o_src, "Summands separated by ';', e.g. E1;L12")->required();
  o_ext->add_option("--tgt", o_tgt, "Summands separated by ';'")->required();
  o_ext->add_flag("--induced", o_induced, "Treat a one-summand source O(d) as A (x) O(d) and report Ext_A");
  o_ext->callback([&] {
    const auto src = parse_split(o_src);
    const auto tgt = parse_split(o_tgt);
    dp2::ExtTable t = dp2::ext_Y_split(src, tgt);
    if (o_induced) {
      if (src.summands.size() != 1) throw dp2::ParseError("--induced needs a single source summand");
      t.a = dp2::ext_A_induced(src.summands.front(), tgt).a;
    }
    if (as_json) {
      emit(json(t));
    } else {
      std::cout << "ext_Y = " << dp2::triple(*t.y).dump() << '\n';
      if (o_induced) std::cout << "ext_A = " << json(t.a).dump() << '\n';
    }
  });
  auto* o_replay = order->add_subcommand("replay", "Replay a vanishing chain")->require_subcommand(1);
  o_replay->add_subcommand("orthogonality", "Ext_A(A(H), E_t) = 0")->callback([&] {
    status = report_claims(dp2::replay_orthogonality(), as_json);
  });
  o_replay->add_subcommand("exceptional", "A(H) is exceptional")->callback([&] {
    status = report_claims(dp2::replay_exceptional(), as_json);
  });

  // replay
  std::string r_target, r_filter;
  std::size_t r_threads = 1;
  auto* replay = app.add_subcommand("replay", "Run registered claims: 'replay all' or 'replay <id>'");
  replay->add_option("target", r_target, "'all' or a claim id")->required();
  replay->add_option("--filter", r_filter, "Only run claims whose id starts with this prefix");
  replay->add_option("--threads", r_threads, "Worker threads")->check(CLI::PositiveNumber);
  replay->callback([&] {
    if (r_target == "all") {
      status = report_claims(dp2::run_all({r_filter, r_threads}), as_json);
    } else {
      if (!r_filter.empty()) throw CLI::ValidationError("--filter", "only valid with 'replay all'");
      status = report_claims({dp2::run_one(r_target)}, as_json);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  } catch (const dp2::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const dp2::UnknownClaim& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return status;
}
