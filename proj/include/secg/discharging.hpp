#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secg/embedding.hpp"
#include "secg/rational.hpp"
#include "secg/reduction.hpp"

namespace secg {

enum class ObjType { vertex, face };

struct ObjRef {
    ObjType type;
    int id;
    bool operator==(const ObjRef&) const = default;
};

struct Transfer {
    ObjRef from, to;
    Rat amount;
    std::string rule;
};

// Exact charge bookkeeping. Initial charges are 2d(v)-6 per vertex and
// l(f)-6 per face; every transfer conserves the total, which is -12 for
// a connected plane graph by Euler's formula.
struct ChargeLedger {
    std::vector<Rat> vertex_charge;
    std::vector<Rat> face_charge;
    std::vector<Transfer> transfers;

    Rat total() const;
    Rat& charge(ObjRef o);
    void apply(ObjRef from, ObjRef to, const Rat& amount, std::string rule);
};

// Requires a connected plane graph (disconnected inputs are audited per
// component, see audit_components).
ChargeLedger initial_charges(const PlaneEmbedding& e);

// Rules R1-R7: faces pay 2 per incident 1-vertex; 5+ vertices pay 2 to
// 1-neighbors and weak 2-neighbors, 4/3 to semiweak and 1 to strong
// ones; 4_2-vertices pay 1 and 4_3-vertices 2/3 per 2-neighbor. Rules
// fire per incidence/adjacency, guards read the vertex taxonomy.
ChargeLedger discharge_general(const PlaneEmbedding& e);

// Single rule R: every face sends 1 to every incident 2-vertex, once per
// incidence (a 2-vertex appearing twice on one face walk receives 2).
ChargeLedger discharge_subcubic(const PlaneEmbedding& e);

enum class DischargeMode { general, subcubic };

struct AuditReport {
    DischargeMode mode;
    ChargeLedger ledger;
    std::vector<ObjRef> negative;          // objects with final charge < 0
    std::optional<Configuration> config;   // reducible configuration, if any
    bool contradiction = false;            // neither negative nor config
};

// Runs the matching discharge and cross-references the configuration
// detector. Requires a connected plane graph of girth >= 6 (subcubic
// mode additionally requires max degree <= 3). An outcome with no
// negative object and no configuration would falsify the underlying
// argument and is flagged as a contradiction.
AuditReport audit(const PlaneEmbedding& e, DischargeMode mode);

// Per-component audits; each entry carries the component's original
// vertex ids next to its report.
struct ComponentAudit {
    std::vector<int> vertices;
    AuditReport report;
};
std::vector<ComponentAudit> audit_components(const PlaneEmbedding& e,
                                             DischargeMode mode);

}  // namespace secg
