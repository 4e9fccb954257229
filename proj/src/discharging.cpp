#include "secg/discharging.hpp"

#include <stdexcept>

namespace secg {

Rat ChargeLedger::total() const {
    Rat t;
    for (const Rat& r : vertex_charge) t += r;
    for (const Rat& r : face_charge) t += r;
    return t;
}

Rat& ChargeLedger::charge(ObjRef o) {
    return o.type == ObjType::vertex ? vertex_charge.at(o.id)
                                     : face_charge.at(o.id);
}

void ChargeLedger::apply(ObjRef from, ObjRef to, const Rat& amount,
                         std::string rule) {
    charge(from) -= amount;
    charge(to) += amount;
    transfers.push_back({from, to, amount, std::move(rule)});
}

ChargeLedger initial_charges(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    if (!g.connected())
        throw std::invalid_argument(
            "charges are defined per connected plane graph");
    ChargeLedger ledger;
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.vertex_charge.push_back(Rat(2 * g.degree(v) - 6));
    for (const Face& f : e.faces())
        ledger.face_charge.push_back(Rat(f.length() - 6));
    return ledger;
}

ChargeLedger discharge_general(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    ChargeLedger ledger = initial_charges(e);

    // R1: faces pay 2 per incident 1-vertex (a pendant vertex occurs on
    // exactly one face walk, once).
    const auto& faces = e.faces();
    for (size_t fi = 0; fi < faces.size(); ++fi)
        for (int v : faces[fi].vertex_walk())
            if (g.degree(v) == 1)
                ledger.apply({ObjType::face, static_cast<int>(fi)},
                             {ObjType::vertex, v}, Rat(2), "R1");

    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexClass cls = classify_vertex(g, v);
        if (cls.degree >= 5) {
            for (int w : g.neighbors(v)) {
                switch (classify_vertex(g, w).kind) {
                    case VertexKind::one_vertex:
                        ledger.apply({ObjType::vertex, v}, {ObjType::vertex, w},
                                     Rat(2), "R2");
                        break;
                    case VertexKind::two_weak:
                        ledger.apply({ObjType::vertex, v}, {ObjType::vertex, w},
                                     Rat(2), "R3");
                        break;
                    case VertexKind::two_semiweak:
                        ledger.apply({ObjType::vertex, v}, {ObjType::vertex, w},
                                     Rat(4, 3), "R4");
                        break;
                    case VertexKind::two_strong:
                        ledger.apply({ObjType::vertex, v}, {ObjType::vertex, w},
                                     Rat(1), "R5");
                        break;
                    default:
                        break;
                }
            }
        } else if (cls.kind == VertexKind::four_two) {
            for (int w : g.neighbors(v))
                if (g.degree(w) == 2)
                    ledger.apply({ObjType::vertex, v}, {ObjType::vertex, w},
                                 Rat(1), "R6");
        } else if (cls.kind == VertexKind::four_three) {
            for (int w : g.neighbors(v))
                if (g.degree(w) == 2)
                    ledger.apply({ObjType::vertex, v}, {ObjType::vertex, w},
                                 Rat(2, 3), "R7");
        }
    }
    return ledger;
}

ChargeLedger discharge_subcubic(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    if (g.max_degree() > 3)
        throw std::invalid_argument("subcubic discharging requires max degree <= 3");
    ChargeLedger ledger = initial_charges(e);
    const auto& faces = e.faces();
    for (size_t fi = 0; fi < faces.size(); ++fi)
        for (int v : faces[fi].vertex_walk())
            if (g.degree(v) == 2)
                ledger.apply({ObjType::face, static_cast<int>(fi)},
                             {ObjType::vertex, v}, Rat(1), "R");
    return ledger;
}

AuditReport audit(const PlaneEmbedding& e, DischargeMode mode) {
    const Graph& g = e.graph();
    if (girth(g) < 6)
        throw std::invalid_argument("audit requires girth at least 6");
    AuditReport report;
    report.mode = mode;
    if (mode == DischargeMode::general) {
        report.ledger = discharge_general(e);
        report.config = find_config_general(e);
    } else {
        report.ledger = discharge_subcubic(e);
        report.config = find_config_subcubic(e);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (report.ledger.vertex_charge[v] < Rat(0))
            report.negative.push_back({ObjType::vertex, v});
    for (size_t f = 0; f < report.ledger.face_charge.size(); ++f)
        if (report.ledger.face_charge[f] < Rat(0))
            report.negative.push_back({ObjType::face, static_cast<int>(f)});
    report.contradiction = report.negative.empty() && !report.config.has_value();
    return report;
}

std::vector<ComponentAudit> audit_components(const PlaneEmbedding& e,
                                             DischargeMode mode) {
    std::vector<ComponentAudit> out;
    for (auto& comp : split_components(e))
        out.push_back({comp.parent_vertex, audit(comp.embedding, mode)});
    return out;
}

}  // namespace secg
