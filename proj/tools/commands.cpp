#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jfl/acceptance.hpp"
#include "jfl/error.hpp"
#include "jfl/genus.hpp"
#include "jfl/jacobi.hpp"
#include "jfl/jf_ring.hpp"
#include "jfl/spectral.hpp"

namespace jfl::cli {

namespace {

using json = nlohmann::ordered_json;

CommandResult guarded(const std::string& name, bool report_status, const std::function<void(CommandResult&)>& body) {
  CommandResult r;
  r.command = name;
  auto fail = [&](std::string_view code, const std::string& message) {
    r = CommandResult{};
    r.command = name;
    r.status = Status::Error;
    r.payload = {{"error", code}, {"message", message}};
    r.lines = {"error: " + message};
  };
  try {
    body(r);
    if (report_status) {
      r.status_line = to_string(r.status);
      if (r.status == Status::Mismatch && r.payload.contains("first_mismatch"))
        r.status_line += " at " + r.payload["first_mismatch"].dump();
    }
  } catch (const Error& e) {
    fail(jfl::to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    fail(jfl::to_string(ErrorCode::Internal), e.what());
  }
  return r;
}

void check_bound(const std::string& flag, int value, int lowest) {
  if (value < lowest)
    throw Error(ErrorCode::InvalidArgument, flag + " must be at least " + std::to_string(lowest));
  const int guard = degree_guard();
  if (value > guard)
    throw Error(ErrorCode::UnsupportedDegree, flag + " " + std::to_string(value) + " exceeds JFL_MAX_DEGREE_GUARD = " +
                                                  std::to_string(guard));
}

std::string y_power(int y2) {
  if (y2 % 2 == 0) return "y^" + std::to_string(y2 / 2);
  return "y^(" + std::to_string(y2) + "/2)";
}

json first_term(const QYSeries& f) {
  if (f.is_zero()) return nullptr;
  const auto& [key, c] = *f.terms().begin();
  return {{"q", key.first}, {"y2", key.second}, {"c", c.get_str()}};
}

// Chern number keys: c2 -> {2}, c2sq -> {2, 2}, c2c3 -> {3, 2}.
Partition parse_chern_key(const std::string& key) {
  Partition p;
  std::size_t i = 0;
  while (i < key.size()) {
    if (key[i] != 'c') throw Error(ErrorCode::InvalidArgument, "bad Chern number name '" + key + "'");
    std::size_t j = ++i;
    while (j < key.size() && std::isdigit(static_cast<unsigned char>(key[j]))) ++j;
    if (j == i) throw Error(ErrorCode::InvalidArgument, "bad Chern number name '" + key + "'");
    const int k = std::stoi(key.substr(i, j - i));
    p.push_back(k);
    if (key.compare(j, 2, "sq") == 0) {
      p.push_back(k);
      j += 2;
    }
    i = j;
  }
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "empty Chern number name");
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

std::map<Partition, Integer> parse_chern_list(const std::string& text) {
  std::map<Partition, Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected key=value, got '" + item + "'");
    const Partition p = parse_chern_key(item.substr(0, eq));
    if (out.contains(p)) throw Error(ErrorCode::InvalidArgument, "Chern number c_" + to_text(p) + " given twice");
    out[p] = parse_integer(item.substr(eq + 1));
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
  }
  return "error";
}

int CommandResult::exit_code() const {
  switch (status) {
    case Status::Ok: return 0;
    case Status::Mismatch: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

json to_json(const CommandResult& r) {
  return {{"command", r.command}, {"status", to_string(r.status)}, {"payload", r.payload}, {"deviations", r.deviations}};
}

std::string render(const CommandResult& r, Format format) {
  if (format == Format::Json) return to_json(r).dump(2) + "\n";
  std::string out;
  for (const auto& line : r.lines) out += line + "\n";
  for (const auto& d : r.deviations) out += "deviation: " + d + "\n";
  if (!r.status_line.empty()) out += r.status_line + "\n";
  return out;
}

int degree_guard() {
  const char* env = std::getenv("JFL_MAX_DEGREE_GUARD");
  if (!env || !*env) return 64;
  const Integer v = parse_integer(env);
  if (v <= 0 || !v.fits_sint_p())
    throw Error(ErrorCode::InvalidArgument, "JFL_MAX_DEGREE_GUARD must be a positive integer");
  return static_cast<int>(v.get_si());
}

CommandResult cmd_expand(const std::string& gen, int qmax) {
  return guarded("expand", false, [&](CommandResult& r) {
    const auto g = parse_generator(gen);
    if (!g) throw Error(ErrorCode::InvalidArgument, "unknown generator '" + gen + "' (expected a, b2, b3, b4, b8)");
    check_bound("--qmax", qmax, 1);
    const QYSeries f = generator_table(qmax)->get(*g).truncated(qmax);
    r.payload = {{"gen", name_of(*g)}, {"qmax", qmax}, {"series", to_json(f)}};
    r.lines = {to_text(f)};
  });
}

CommandResult cmd_verify(const std::string& which, int qmax) {
  return guarded("verify", true, [&](CommandResult& r) {
    if (which != "relation" && which != "mf-embed" && which != "all")
      throw Error(ErrorCode::InvalidArgument, "--which must be relation, mf-embed or all");
    check_bound("--qmax", qmax, 1);
    std::vector<IdentityCheck> checks;
    if (which != "mf-embed") checks.push_back({"4*b8 + b4^2 - b2*b3^2", relation_defect(qmax)});
    if (which != "relation") {
      checks.push_back({"c4^3 - c6^2 - 1728*Delta", modular_relation_defect(qmax)});
      for (auto& c : mf_embedding_checks(qmax)) checks.push_back(std::move(c));
    }
    json arr = json::array();
    for (const auto& c : checks) {
      const json at = first_term(c.defect);
      arr.push_back({{"name", c.name}, {"holds", c.holds()}, {"first_nonzero", at}});
      std::string line = c.name + ": ";
      if (c.holds()) {
        line += "0 + O(q^" + std::to_string(qmax) + ")";
      } else {
        line += "nonzero coefficient " + at["c"].get<std::string>() + " at q^" + std::to_string(at["q"].get<int>()) +
                " " + y_power(at["y2"].get<int>());
        if (r.status == Status::Ok) {
          r.status = Status::Mismatch;
          json loc = at;
          loc["check"] = c.name;
          r.payload["first_mismatch"] = loc;
        }
      }
      r.lines.push_back(line);
    }
    r.payload["which"] = which;
    r.payload["qmax"] = qmax;
    r.payload["checks"] = std::move(arr);
  });
}

CommandResult cmd_genus(int dim, const std::string& chern) {
  return guarded("genus", false, [&](CommandResult& r) {
    if (dim != 4 && dim != 6 && dim != 8)
      throw Error(ErrorCode::UnsupportedDim, "--dim must be 4, 6 or 8 (real dimension), got " + std::to_string(dim));
    const ChernData data(dim / 2, parse_chern_list(chern));
    const JFElement g = elliptic_genus(data);
    const Integer chi = genus_at_z0(g);
    const Integer top = data.get({dim / 2});
    r.payload = {{"dim", dim},
                 {"chern", to_json(data)},
                 {"genus", to_json(g)},
                 {"text", to_text(g)},
                 {"euler_characteristic", chi.get_str()}};
    r.lines = {to_text(g), "euler characteristic: " + chi.get_str()};
    if (chi != top) {
      r.status = Status::Mismatch;
      r.payload["first_mismatch"] = {{"euler_characteristic", chi.get_str()}, {"c_top", top.get_str()}};
      r.lines.push_back("mismatch: genus at z = 0 is " + chi.get_str() + " but c_" + std::to_string(dim / 2) + " = " +
                        top.get_str());
    }
  });
}

CommandResult cmd_homotopy(const std::string& target, int max_degree) {
  return guarded("homotopy", true, [&](CommandResult& r) {
    if (target != "tjf" && target != "msu") throw Error(ErrorCode::InvalidArgument, "--target must be tjf or msu");
    check_bound("--max-degree", max_degree, 0);
    struct Row {
      int n;
      FPAbelianGroup computed;
      std::optional<FPAbelianGroup> expected;
      std::vector<std::string> notes;
    };
    std::vector<Row> rows;
    if (target == "tjf") {
      const auto report = check_tjf_ring_structure(max_degree);
      for (const auto& d : report.degrees) rows.push_back({d.n, d.computed, d.expected, d.notes});
      r.deviations = report.deviations;
    } else {
      if (max_degree > kMsuMaxDegree)
        throw Error(ErrorCode::UnsupportedDegree,
                    "MSU generator tables stop at degree " + std::to_string(kMsuMaxDegree));
      const auto report = check_msu_low_degrees();
      for (const auto& d : report.degrees)
        if (d.n <= max_degree) rows.push_back({d.n, d.computed, d.expected, d.notes});
      r.deviations = report.deviations;
      if (max_degree > 16) {
        const auto groups = homotopy_groups(msu_page(max_degree), max_degree);
        for (int n = 17; n <= max_degree; ++n) rows.push_back({n, groups.at(n), std::nullopt, {}});
      }
    }
    json arr = json::array();
    r.lines.push_back(pad("n", 4) + pad("computed", 16) + pad("expected", 16) + "match");
    for (const auto& row : rows) {
      const bool match = !row.expected || row.computed == *row.expected;
      json e = {{"n", row.n},
                {"computed", to_json(row.computed)},
                {"expected", row.expected ? to_json(*row.expected) : json(nullptr)},
                {"match", row.expected ? json(match) : json(nullptr)}};
      if (!row.notes.empty()) e["notes"] = row.notes;
      arr.push_back(std::move(e));
      r.lines.push_back(pad(std::to_string(row.n), 4) + pad(to_text(row.computed), 16) +
                        pad(row.expected ? to_text(*row.expected) : "-", 16) +
                        (row.expected ? (match ? "yes" : "NO") : "-"));
      if (!match && r.status == Status::Ok) {
        r.status = Status::Mismatch;
        r.payload["first_mismatch"] = {{"n", row.n}};
      }
    }
    r.payload["target"] = target;
    r.payload["max_degree"] = max_degree;
    r.payload["degrees"] = std::move(arr);
  });
}

CommandResult cmd_surjectivity(const std::string& n_param, int max_degree) {
  return guarded("surjectivity", true, [&](CommandResult& r) {
    const Integer N = parse_integer(n_param);
    check_bound("--max-degree", max_degree, 0);
    const SurjectivityReport rep = surjectivity_check(N, max_degree);
    r.payload = to_json(rep);
    r.deviations = rep.deviations;
    std::size_t free = 0, ok = 0;
    for (const auto& c : rep.checks) {
      free += c.torsion ? 0 : 1;
      ok += c.ok ? 1 : 0;
    }
    r.lines = {
        "sub-page -> tjF page, N = " + N.get_str() + ", n <= " + std::to_string(max_degree),
        "C8 -> " + rep.c8_image + " (relation preserved: " + (rep.relation_preserved ? "yes" : "no") + ")",
        "printed C8 image " + rep.printed_c8_image + " (relation preserved: " +
            (rep.printed_relation_preserved ? "yes" : "no") + ")",
        "bidegrees checked: " + std::to_string(rep.checks.size()) + " (free " + std::to_string(free) + ", torsion " +
            std::to_string(rep.checks.size() - free) + "), isomorphisms: " + std::to_string(ok),
    };
    if (!rep.relation_preserved) {
      r.status = Status::Mismatch;
      r.payload["first_mismatch"] = {{"relation", "4*C8 + B4^2 - B2*B3^2"}};
    } else if (const auto f = rep.first_failure()) {
      r.status = Status::Mismatch;
      r.payload["first_mismatch"] = {{"n", f->first}, {"s", f->second}};
    }
  });
}

CommandResult cmd_image(int degree) {
  return guarded("image", true, [&](CommandResult& r) {
    check_bound("--degree", degree, 0);
    const FPAbelianGroup cok = cokernel(degree);
    const auto classes = odd_b2_classes(degree);
    const bool generate = odd_b2_classes_generate_cokernel(degree);
    FPAbelianGroup expected;
    expected.torsion.assign(classes.size(), Integer(2));
    json names = json::array();
    std::string listed;
    for (const auto& m : classes) {
      names.push_back(to_text(m));
      listed += (listed.empty() ? "" : ", ") + to_text(m);
    }
    r.payload = {{"degree", degree},
                 {"jf_rank", degree_basis(degree).size()},
                 {"cokernel", to_json(cok)},
                 {"expected", to_json(expected)},
                 {"classes", std::move(names)},
                 {"classes_generate", generate}};
    r.lines = {"degree " + std::to_string(degree) + ": jF rank " + std::to_string(degree_basis(degree).size()),
               "cokernel: " + to_text(cok) + " (expected " + to_text(expected) + ")",
               "classes: " + (listed.empty() ? std::string("none") : listed)};
    if (cok != expected || !generate) {
      r.status = Status::Mismatch;
      r.payload["first_mismatch"] = {{"degree", degree}};
    }
  });
}

CommandResult cmd_verify_all(bool timing) {
  return guarded("verify-all", true, [&](CommandResult& r) {
    const auto claims = run_acceptance();
    std::size_t passed = 0;
    for (const auto& c : claims) {
      r.lines.push_back(to_text(c, timing));
      if (c.passed) {
        ++passed;
      } else if (r.status == Status::Ok) {
        r.status = Status::Mismatch;
        r.payload["first_mismatch"] = {{"claim", c.id}};
      }
    }
    r.lines.push_back("passed " + std::to_string(passed) + "/" + std::to_string(claims.size()));
    r.payload["claims"] = to_json(claims);
    r.payload["passed"] = passed;
    r.payload["total"] = claims.size();
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series, jF ring, spectral sequence and elliptic genus computations", "jfl"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text";
  bool json_flag = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", json_flag, "Same as --format json");

  std::string gen, which = "all", chern, target, n_param;
  int qmax = 0, dim = 0, max_degree = 0, degree = 0;
  bool timing = false;

  auto* expand = app.add_subcommand("expand", "q-expansion of a generator");
  expand->add_option("--gen", gen, "a, b2, b3, b4 or b8")->required();
  expand->add_option("--qmax", qmax, "Expand through q^(qmax - 1)")->required();

  auto* verify = app.add_subcommand("verify", "Check the ring relation and the modular form embeddings");
  verify->add_option("--which", which, "relation, mf-embed or all");
  verify->add_option("--qmax", qmax, "Check through q^(qmax - 1)")->required();

  auto* genus = app.add_subcommand("genus", "Elliptic genus from Chern numbers");
  genus->add_option("--dim", dim, "Real dimension: 4, 6 or 8")->required();
  genus->add_option("--chern", chern, "Chern numbers, e.g. c2sq=1350,c4=2610")->required();

  auto* homotopy = app.add_subcommand("homotopy", "Homotopy groups from the E4 = E_infinity page");
  homotopy->add_option("--target", target, "tjf or msu")->required();
  homotopy->add_option("--max-degree", max_degree, "Largest degree n")->required();

  auto* surj = app.add_subcommand("surjectivity", "Compare the MSU sub-page with the tjF page");
  surj->add_option("--n-param", n_param, "The integer N in the image of B4")->required();
  surj->add_option("--max-degree", max_degree, "Largest degree n")->required();

  auto* image = app.add_subcommand("image", "Image of MSU in jF and its cokernel");
  image->add_option("--degree", degree, "Degree d")->required();

  auto* all = app.add_subcommand("verify-all", "Run every acceptance claim");
  all->alias("verify-paper");
  all->add_flag("--timing", timing, "Show per-claim timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  CommandResult r;
  if (*expand) r = cmd_expand(gen, qmax);
  else if (*verify) r = cmd_verify(which, qmax);
  else if (*genus) r = cmd_genus(dim, chern);
  else if (*homotopy) r = cmd_homotopy(target, max_degree);
  else if (*surj) r = cmd_surjectivity(n_param, max_degree);
  else if (*image) r = cmd_image(degree);
  else r = cmd_verify_all(timing);

  const Format f = (json_flag || format == "json") ? Format::Json : Format::Text;
  (f == Format::Text && r.status == Status::Error ? err : out) << render(r, f);
  return r.exit_code();
}

}  // namespace jfl::cli
