#include "extalg/equation_doc.hpp"

#include <json.hpp>
#include <stdexcept>

namespace extalg {

namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<FieldOp, const char*> kOpNames[] = {
    {FieldOp::Ext, "ext"}, {FieldOp::Int, "int"}, {FieldOp::Lap, "lap"},
    {FieldOp::Tensor, "tensor"}, {FieldOp::MatDiv, "matdiv"},
};

const char* op_name(FieldOp op) {
    for (const auto& [o, name] : kOpNames)
        if (o == op) return name;
    return "?";
}

FieldOp op_from_name(const std::string& s) {
    for (const auto& [o, name] : kOpNames)
        if (s == name) return o;
    throw std::invalid_argument("unknown operator \"" + s + "\"");
}

json side_to_json(const FormalExpr& e) {
    json out = json::array();
    for (const auto& t : e.terms()) {
        json ops = json::array();
        for (FieldOp op : t.ops) ops.push_back(op_name(op));
        out.push_back({{"coeff", to_fraction_string(t.coeff)}, {"ops", ops}, {"symbol", t.symbol}});
    }
    return out;
}

FormalExpr side_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("equation side must be an array");
    std::vector<FormalTerm> terms;
    for (const auto& t : j) {
        FormalTerm term{parse_rational(t.at("coeff").get<std::string>()), {}, t.at("symbol").get<std::string>()};
        for (const auto& op : t.at("ops")) term.ops.push_back(op_from_name(op.get<std::string>()));
        terms.push_back(std::move(term));
    }
    return FormalExpr(std::move(terms));
}

}  // namespace

std::string equation_to_json(const FieldEquation& eq) {
    json symbols = json::array();
    for (const auto& s : eq.symbols)
        symbols.push_back({{"name", s.name},
                           {"grade", s.grade},
                           {"role", s.role == FieldRole::Dynamical ? "dynamical" : "source"}});
    json doc = {{"metric", {{"k", eq.metric.k()}, {"n", eq.metric.n()}}},
                {"grade", eq.grade},
                {"lhs", side_to_json(eq.lhs)},
                {"rhs", side_to_json(eq.rhs)},
                {"symbols", symbols}};
    return doc.dump();
}

FieldEquation equation_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        const Metric metric(doc.at("metric").at("k").get<int>(), doc.at("metric").at("n").get<int>());
        std::vector<FieldSymbol> symbols;
        for (const auto& s : doc.at("symbols")) {
            const std::string role = s.at("role").get<std::string>();
            if (role != "dynamical" && role != "source") throw std::invalid_argument("unknown role \"" + role + "\"");
            symbols.push_back(FieldSymbol{s.at("name").get<std::string>(), s.at("grade").get<int>(),
                                          role == "dynamical" ? FieldRole::Dynamical : FieldRole::Source});
        }
        FieldEquation eq{metric, doc.at("grade").get<int>(), std::move(symbols), side_from_json(doc.at("lhs")),
                         side_from_json(doc.at("rhs"))};
        for (const auto* side : {&eq.lhs, &eq.rhs})
            for (const auto& t : side->terms()) (void)eq.symbol(t.symbol);
        return eq;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed equation document: ") + e.what());
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("malformed equation document: ") + e.what());
    }
}

}  // namespace extalg
