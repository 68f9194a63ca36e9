#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hhcalc/cohomology.hpp"

namespace hhcalc {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const ParamsEcho& p) {
    ordered_json j;
    j["T"] = p.T;
    j["field"] = p.field;
    if (p.p) j["p"] = *p.p;
    j["q"] = p.q;
    j["char_divides"] = p.char_divides;
    return j;
}

inline ordered_json to_json(const CohomologyReport& rep) {
    ordered_json j;
    j["params"] = to_json(rep.params);
    j["degrees"] = ordered_json::array();
    for (const auto& d : rep.degrees) {
        ordered_json row;
        row["n"] = d.n;
        row["hom_dim"] = d.hom_dim;
        row["ker_dim"] = d.ker_dim;
        row["rank"] = d.rank;
        row["hh"] = d.hh;
        row["hh_oracle"] = d.hh_oracle;
        row["ker_oracle"] = d.ker_oracle;
        row["hom_oracle"] = d.hom_oracle;
        row["match"] = d.match;
        j["degrees"].push_back(std::move(row));
    }
    j["all_match"] = rep.all_match;
    return j;
}

inline void write_csv(std::ostream& os, const CohomologyReport& rep) {
    os << "n,hom_dim,ker_dim,rank,hh,hh_oracle,match\n";
    for (const auto& d : rep.degrees)
        os << d.n << ',' << d.hom_dim << ',' << d.ker_dim << ',' << d.rank << ',' << d.hh << ',' << d.hh_oracle << ','
           << (d.match ? "true" : "false") << '\n';
}

inline std::string describe(const ParamsEcho& p) {
    std::ostringstream os;
    os << "T=" << p.T << "  field=" << p.field;
    if (p.p) os << "(p=" << *p.p << ")";
    os << "  q=(";
    for (std::size_t k = 0; k < p.q.size(); ++k) os << (k ? "," : "") << p.q[k];
    os << ")  char|2T+1=" << (p.char_divides ? "yes" : "no");
    return os.str();
}

inline void write_table(std::ostream& os, const CohomologyReport& rep) {
    os << describe(rep.params) << '\n';
    const char* cols[] = {"n", "hom_dim", "ker_dim", "rank", "hh", "hh_oracle", "ker_oracle", "hom_oracle", "match"};
    for (const char* c : cols) os << std::setw(11) << c;
    os << '\n';
    for (const auto& d : rep.degrees) {
        os << std::setw(11) << d.n << std::setw(11) << d.hom_dim << std::setw(11) << d.ker_dim << std::setw(11)
           << d.rank << std::setw(11) << d.hh << std::setw(11) << d.hh_oracle << std::setw(11) << d.ker_oracle
           << std::setw(11) << d.hom_oracle << std::setw(11) << (d.match ? "yes" : "NO") << '\n';
    }
    os << "all_match: " << (rep.all_match ? "yes" : "NO") << '\n';
}

template <ExactField K>
ordered_json to_json(const DifferentialTable<K>& d) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : d.rows) {
        ordered_json r;
        r["degree"] = d.n;
        r["i"] = row.source.i.value();
        r["j"] = row.source.j;
        r["terms"] = ordered_json::array();
        for (const auto& t : row.terms) {
            ordered_json term;
            term["coeff"] = t.coeff.to_string();
            term["left"] = t.left.to_string();
            term["target"] = {t.target.i.value(), t.target.j};
            term["right"] = t.right.to_string();
            r["terms"].push_back(std::move(term));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace hhcalc
