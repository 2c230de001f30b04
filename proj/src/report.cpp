#include "cqhilb/report.hpp"

#include <algorithm>
#include <sstream>

#include "cqhilb/ghilb.hpp"
#include "cqhilb/mckay.hpp"
#include "cqhilb/quiver.hpp"
#include "cqhilb/toric.hpp"

namespace cqh {

namespace {

using nlohmann::json;

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::vector<Rational> parse_rationals(const json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(Rational::parse(x.get<std::string>()));
    return out;
}

template <typename T>
std::string joined(const std::vector<T>& items, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
    return os.str();
}

std::string divisor_list(const std::vector<int>& ts) {
    std::vector<std::string> names;
    for (int t : ts) names.push_back("E_" + std::to_string(t));
    return names.empty() ? "-" : joined(names, ", ");
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

json divisor_json(const Divisor& d) {
    json out = json::object();
    for (const auto& [id, c] : d.terms()) out[id.str()] = c.str();
    return out;
}

json divisors_json(const std::vector<Divisor>& ds) {
    json out = json::array();
    for (const auto& d : ds) out.push_back(divisor_json(d));
    return out;
}

std::vector<Divisor> parse_divisors(const json& j) {
    std::vector<Divisor> out;
    for (const auto& d : j) {
        Divisor div;
        for (const auto& [key, value] : d.items()) div.add(RayId::parse(key), Rational::parse(value.get<std::string>()));
        out.push_back(std::move(div));
    }
    return out;
}

json errata_json(const Report& rep) {
    json out = json::array();
    for (const auto& e : rep.errata) out.push_back(e);
    return out;
}

json input_json(const Report& rep) { return {{"s", rep.s}, {"n", rep.n}, {"r", rep.r}}; }

json singularity_json(const Report& rep) {
    return {{"ages", rational_strings(rep.ages)},
            {"canonical", rep.canonical},
            {"terminal", rep.terminal},
            {"gorenstein", rep.gorenstein}};
}

json resolution_json(const Report& rep) {
    return {{"discrepancies", rational_strings(rep.discrepancies)},
            {"crepant", rep.crepant},
            {"principal_divisors", divisors_json(rep.principal_divisors)}};
}

json fan_json(const Report& rep) {
    std::vector<std::vector<int>> edges;
    for (const auto& [a, b] : rep.intersection_graph) edges.push_back({a, b});
    return {{"cone_count", rep.cone_count},
            {"smooth", rep.smooth},
            {"cones", rep.cones},
            {"intersection_graph", edges},
            {"projective_type", rep.projective_type}};
}

json hilb_json(const Report& rep) {
    json points = json::array();
    for (const auto& p : rep.fixed_points) {
        points.push_back({{"label", p.label},
                          {"generators", p.generators},
                          {"standard_monomials", p.standard_monomials},
                          {"tangent_dimension", p.tangent_dimension},
                          {"exceptional_divisors", p.exceptional_divisors},
                          {"cone", p.cone}});
    }
    return {{"fixed_point_count", rep.fixed_points.size()}, {"fixed_points", points}};
}

json mckay_json(const Report& rep) {
    std::vector<std::vector<std::string>> table;
    for (const auto& row : rep.mckay_table) table.push_back(rational_strings(row));
    std::vector<std::vector<int>> pairs;
    for (const auto& [t, e] : rep.correspondence) pairs.push_back({t, e});
    return {{"table", table}, {"correspondence", pairs}, {"m_divisors", divisors_json(rep.m_divisors)}, {"errata", errata_json(rep)}};
}

json fm_json(const Report& rep) {
    json out = json::array();
    for (const auto& f : rep.fm) {
        out.push_back({{"character", f.character},
                       {"terms", f.terms},
                       {"h0_support", f.h0_support},
                       {"h_minus_n_support", f.h_minus_n_support}});
    }
    return out;
}

json quiver_json(const Report& rep) {
    return {{"arrow_counts", rep.arrow_counts}, {"chart_count", rep.chart_count}, {"witness", rep.witness}};
}

json section_json(const Report& rep, Section section) {
    switch (section) {
        case Section::All: return to_json(rep);
        case Section::FixedPoints: return {{"input", input_json(rep)}, {"hilb", hilb_json(rep)}};
        case Section::Fan: return {{"input", input_json(rep)}, {"fan", fan_json(rep)}};
        case Section::McKayTable: return {{"input", input_json(rep)}, {"mckay", mckay_json(rep)}};
        case Section::Fm: return {{"input", input_json(rep)}, {"fm", fm_json(rep)}};
        case Section::Quiver: return {{"input", input_json(rep)}, {"quiver", quiver_json(rep)}};
    }
    return {};
}

// Markdown pieces

std::string md_singularity(const Report& rep) {
    std::ostringstream os;
    os << "## Singularity\n\n"
       << "| k | age |\n|---|---|\n";
    for (std::size_t k = 0; k < rep.ages.size(); ++k) os << "| " << k + 1 << " | " << rep.ages[k] << " |\n";
    os << "\ncanonical=" << std::boolalpha << rep.canonical << ", terminal=" << rep.terminal
       << ", gorenstein=" << rep.gorenstein << "\n\n";
    os << "## Resolution\n\n| divisor | discrepancy |\n|---|---|\n";
    for (std::size_t t = 0; t < rep.discrepancies.size(); ++t) os << "| E_" << t + 1 << " | " << rep.discrepancies[t] << " |\n";
    os << "\ncrepant=" << rep.crepant << "\n\n";
    return os.str();
}

std::string md_fan(const Report& rep) {
    std::ostringstream os;
    os << "## Fan\n\ncone_count=" << rep.cone_count << ", smooth=" << std::boolalpha << rep.smooth << "\n\n"
       << "| cone | rays |\n|---|---|\n";
    for (std::size_t c = 0; c < rep.cones.size(); ++c) os << "| " << c << " | " << joined(rep.cones[c], ", ") << " |\n";
    std::vector<std::string> edges;
    for (const auto& [a, b] : rep.intersection_graph) edges.push_back("E_" + std::to_string(a) + "-E_" + std::to_string(b));
    os << "\nintersection graph: " << (edges.empty() ? "-" : joined(edges, ", ")) << "\n";
    if (!rep.projective_type.empty()) os << "projective-space type: " << divisor_list(rep.projective_type) << "\n";
    os << "\n";
    return os.str();
}

std::string md_hilb(const Report& rep) {
    std::ostringstream os;
    os << "## Fixed points\n\n" << rep.fixed_points.size() << " torus-fixed points\n\n"
       << "| label | generators | standard monomials | tangent dim | divisors |\n|---|---|---|---|---|\n";
    for (const auto& p : rep.fixed_points) {
        os << "| " << p.label << " | " << joined(p.generators, ", ") << " | " << joined(p.standard_monomials, ", ") << " | "
           << p.tangent_dimension << " | " << divisor_list(p.exceptional_divisors) << " |\n";
    }
    os << "\n";
    return os.str();
}

std::string md_mckay(const Report& rep) {
    std::ostringstream os;
    os << "## McKay table\n\n|  |";
    for (int t = 1; t < rep.r; ++t) os << " E_" << t << " |";
    os << "\n|---|";
    for (int t = 1; t < rep.r; ++t) os << "---|";
    os << "\n";
    for (std::size_t k = 0; k < rep.mckay_table.size(); ++k) {
        os << "| M_chi_" << k << " |";
        for (const auto& x : rep.mckay_table[k]) os << " " << x << " |";
        os << "\n";
    }
    os << "\n| character | divisor |\n|---|---|\n";
    for (const auto& [t, e] : rep.correspondence) os << "| chi_" << t << " | E_" << e << " |\n";
    if (!rep.errata.empty()) {
        os << "\n### Errata\n\n| id | computed | published |\n|---|---|---|\n";
        for (const auto& e : rep.errata) os << "| " << e.id << " | " << e.computed << " | " << e.published << " |\n";
    }
    os << "\n";
    return os.str();
}

std::string md_fm(const Report& rep) {
    std::ostringstream os;
    os << "## Fourier-Mukai supports\n\n| character | H^0 | H^-" << rep.n << " | terms |\n|---|---|---|---|\n";
    for (const auto& f : rep.fm) {
        std::vector<std::string> degrees;
        for (const auto& term : f.terms) degrees.push_back("[" + joined(term, " ") + "]");
        os << "| chi_" << f.character << " | " << divisor_list(f.h0_support) << " | " << divisor_list(f.h_minus_n_support) << " | "
           << joined(degrees, " ") << " |\n";
    }
    os << "\n";
    return os.str();
}

std::string md_quiver(const Report& rep) {
    std::ostringstream os;
    os << "## Quiver\n\n| from \\ to |";
    for (int l = 0; l < rep.r; ++l) os << " " << l << " |";
    os << "\n|---|";
    for (int l = 0; l < rep.r; ++l) os << "---|";
    os << "\n";
    for (std::size_t k = 0; k < rep.arrow_counts.size(); ++k) {
        os << "| " << k << " |";
        for (int c : rep.arrow_counts[k]) os << " " << c << " |";
        os << "\n";
    }
    os << "\nchart_count=" << rep.chart_count << ", witness=" << (rep.witness ? "pass" : "fail") << "\n\n";
    return os.str();
}

std::string render_md(const Report& rep, Section section) {
    std::ostringstream os;
    os << "# Cyclic quotient (s, n, r) = (" << rep.s << ", " << rep.n << ", " << rep.r << ")\n\n";
    switch (section) {
        case Section::All:
            os << md_singularity(rep) << md_fan(rep) << md_hilb(rep) << md_mckay(rep) << md_fm(rep) << md_quiver(rep);
            break;
        case Section::FixedPoints: os << md_hilb(rep); break;
        case Section::Fan: os << md_fan(rep); break;
        case Section::McKayTable: os << md_mckay(rep); break;
        case Section::Fm: os << md_fm(rep); break;
        case Section::Quiver: os << md_quiver(rep); break;
    }
    std::string out = os.str();
    while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
    return out;
}

std::string render_csv(const Report& rep, Section section) {
    std::string out;
    switch (section) {
        case Section::All: {
            out += csv_row({"path", "value"});
            const json flat = to_json(rep).flatten();
            for (const auto& [path, value] : flat.items())
                out += csv_row({path, value.is_string() ? value.get<std::string>() : value.dump()});
            break;
        }
        case Section::FixedPoints:
            out += csv_row({"label", "tangent_dimension", "exceptional_divisors", "generators", "standard_monomials"});
            for (const auto& p : rep.fixed_points) {
                std::vector<std::string> divs;
                for (int t : p.exceptional_divisors) divs.push_back("E_" + std::to_string(t));
                out += csv_row({p.label, std::to_string(p.tangent_dimension), joined(divs, ";"), joined(p.generators, ";"),
                                joined(p.standard_monomials, ";")});
            }
            break;
        case Section::Fan:
            out += csv_row({"cone", "rays"});
            for (std::size_t c = 0; c < rep.cones.size(); ++c) out += csv_row({std::to_string(c), joined(rep.cones[c], ";")});
            break;
        case Section::McKayTable: {
            std::vector<std::string> header{"character"};
            for (int t = 1; t < rep.r; ++t) header.push_back("E_" + std::to_string(t));
            out += csv_row(header);
            for (std::size_t k = 0; k < rep.mckay_table.size(); ++k) {
                std::vector<std::string> row{"chi_" + std::to_string(k)};
                for (const auto& x : rep.mckay_table[k]) row.push_back(x.str());
                out += csv_row(row);
            }
            break;
        }
        case Section::Fm:
            out += csv_row({"character", "h0_support", "h_minus_n_support"});
            for (const auto& f : rep.fm) {
                std::vector<std::string> h0, hn;
                for (int t : f.h0_support) h0.push_back("E_" + std::to_string(t));
                for (int t : f.h_minus_n_support) hn.push_back("E_" + std::to_string(t));
                out += csv_row({"chi_" + std::to_string(f.character), joined(h0, ";"), joined(hn, ";")});
            }
            break;
        case Section::Quiver:
            out += csv_row({"source", "target", "arrows"});
            for (std::size_t k = 0; k < rep.arrow_counts.size(); ++k)
                for (std::size_t l = 0; l < rep.arrow_counts[k].size(); ++l)
                    if (rep.arrow_counts[k][l] > 0)
                        out += csv_row({std::to_string(k), std::to_string(l), std::to_string(rep.arrow_counts[k][l])});
            break;
    }
    return out;
}

}  // namespace

Report build_report(const GroupData& g) {
    const int s = g.s(), n = g.n(), r = g.r();
    Report rep;
    rep.s = s;
    rep.n = n;
    rep.r = r;

    const auto st = singularity_type(g);
    rep.ages = st.ages;
    rep.canonical = st.canonical;
    rep.terminal = st.terminal;
    rep.gorenstein = st.gorenstein;

    rep.discrepancies = discrepancies(g);
    rep.crepant = std::all_of(rep.discrepancies.begin(), rep.discrepancies.end(), [](const Rational& d) { return d.is_zero(); });

    for (int i = 1; i <= n; ++i) rep.principal_divisors.push_back(principal_divisor(g, i));

    const Fan fan = resolution_fan(g);
    rep.cone_count = static_cast<int>(fan.maximal_cones.size());
    rep.smooth = std::all_of(fan.maximal_cones.begin(), fan.maximal_cones.end(),
                             [&](const Cone& c) { return cone_is_smooth(g, c); });
    for (const auto& c : fan.maximal_cones) {
        std::vector<std::string> ids;
        for (auto id : c.ray_ids) ids.push_back(id.str());
        rep.cones.push_back(std::move(ids));
    }
    const auto edges = intersection_graph(fan);
    rep.intersection_graph.assign(edges.begin(), edges.end());
    const auto stars = exceptional_star_sizes(g, fan);
    if (s == n - 1 && stars.front() == n) rep.projective_type.push_back(1);
    if (s == 1 && stars.back() == n && (r > 2 || rep.projective_type.empty())) rep.projective_type.push_back(r - 1);

    const auto fps = enumerate_fixed_points(g);
    std::vector<GGraph> graphs;
    for (const auto& p : fps) graphs.push_back(companion_graph(g, p));
    const auto matches = match_cones_to_ggraphs(g, fan, graphs);
    std::vector<const Cone*> cone_of(fps.size(), nullptr);
    for (const auto& m : matches) cone_of[m.graph_index] = &fan.maximal_cones[m.cone_index];
    for (std::size_t idx = 0; idx < fps.size(); ++idx) {
        FixedPointEntry e;
        e.label = label_str(fps[idx].label);
        for (const auto& m : fps[idx].generators) e.generators.push_back(m.str());
        for (const auto& m : graphs[idx].monomials) e.standard_monomials.push_back(m.str());
        e.tangent_dimension = tangent_dimension(g, fps[idx]);
        if (cone_of[idx]) {
            for (auto id : cone_of[idx]->ray_ids) {
                e.cone.push_back(id.str());
                if (id.is_exceptional()) e.exceptional_divisors.push_back(id.index);
            }
        }
        rep.fixed_points.push_back(std::move(e));
    }

    rep.mckay_table = m_table(g).entries;
    rep.correspondence = correspondence_table(g);
    for (int k = 0; k < r; ++k) rep.m_divisors.push_back(m_divisor(g, k));
    rep.errata = errata_for(g);

    for (int t = 0; t < r; ++t) {
        FmEntry f;
        f.character = t;
        f.terms = fm_complex(g, t).terms;
        if (t != 0) {
            const auto h0 = h0_support(g, t);
            f.h0_support.assign(h0.begin(), h0.end());
        }
        const auto hn = h_minus_n_support(g, t);
        f.h_minus_n_support.assign(hn.begin(), hn.end());
        rep.fm.push_back(std::move(f));
    }

    const McKayQuiver q(g);
    for (int k = 0; k < r; ++k) {
        std::vector<int> row;
        for (int l = 0; l < r; ++l) row.push_back(q.arrow_count(k, l));
        rep.arrow_counts.push_back(std::move(row));
    }
    for (const auto& p : fps) {
        rep_from_fixed_point(q, p);
        ++rep.chart_count;
    }
    rep.witness = connectedness_witness(g).passed();
    return rep;
}

nlohmann::json to_json(const Report& rep) {
    return {{"input", input_json(rep)},       {"singularity", singularity_json(rep)}, {"resolution", resolution_json(rep)},
            {"fan", fan_json(rep)},           {"hilb", hilb_json(rep)},               {"mckay", mckay_json(rep)},
            {"fm", fm_json(rep)},             {"quiver", quiver_json(rep)},           {"errata", errata_json(rep)}};
}

Report report_from_json(const nlohmann::json& j) {
    Report rep;
    rep.s = j.at("input").at("s").get<int>();
    rep.n = j.at("input").at("n").get<int>();
    rep.r = j.at("input").at("r").get<int>();

    const auto& sing = j.at("singularity");
    rep.ages = parse_rationals(sing.at("ages"));
    rep.canonical = sing.at("canonical").get<bool>();
    rep.terminal = sing.at("terminal").get<bool>();
    rep.gorenstein = sing.at("gorenstein").get<bool>();

    rep.discrepancies = parse_rationals(j.at("resolution").at("discrepancies"));
    rep.crepant = j.at("resolution").at("crepant").get<bool>();
    rep.principal_divisors = parse_divisors(j.at("resolution").at("principal_divisors"));

    const auto& fan = j.at("fan");
    rep.cone_count = fan.at("cone_count").get<int>();
    rep.smooth = fan.at("smooth").get<bool>();
    rep.cones = fan.at("cones").get<std::vector<std::vector<std::string>>>();
    for (const auto& e : fan.at("intersection_graph")) rep.intersection_graph.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    rep.projective_type = fan.at("projective_type").get<std::vector<int>>();

    for (const auto& p : j.at("hilb").at("fixed_points")) {
        FixedPointEntry e;
        e.label = p.at("label").get<std::string>();
        e.generators = p.at("generators").get<std::vector<std::string>>();
        e.standard_monomials = p.at("standard_monomials").get<std::vector<std::string>>();
        e.tangent_dimension = p.at("tangent_dimension").get<int>();
        e.exceptional_divisors = p.at("exceptional_divisors").get<std::vector<int>>();
        e.cone = p.at("cone").get<std::vector<std::string>>();
        rep.fixed_points.push_back(std::move(e));
    }

    const auto& mk = j.at("mckay");
    for (const auto& row : mk.at("table")) rep.mckay_table.push_back(parse_rationals(row));
    for (const auto& e : mk.at("correspondence")) rep.correspondence.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    rep.m_divisors = parse_divisors(mk.at("m_divisors"));
    rep.errata = j.at("errata").get<std::vector<Erratum>>();

    for (const auto& f : j.at("fm")) {
        FmEntry e;
        e.character = f.at("character").get<int>();
        e.terms = f.at("terms").get<std::vector<std::vector<int>>>();
        e.h0_support = f.at("h0_support").get<std::vector<int>>();
        e.h_minus_n_support = f.at("h_minus_n_support").get<std::vector<int>>();
        rep.fm.push_back(std::move(e));
    }

    const auto& qv = j.at("quiver");
    rep.arrow_counts = qv.at("arrow_counts").get<std::vector<std::vector<int>>>();
    rep.chart_count = qv.at("chart_count").get<int>();
    rep.witness = qv.at("witness").get<bool>();
    return rep;
}

std::string render(const Report& report, Section section, Format format) {
    switch (format) {
        case Format::Json: return section_json(report, section).dump(2) + "\n";
        case Format::Markdown: return render_md(report, section);
        case Format::Csv: return render_csv(report, section);
    }
    return {};
}

}  // namespace cqh
