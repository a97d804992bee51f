"""The ontology feature catalogue.

Every extractor is a pure function of the parsed ontology (plus its
hierarchy indexes), total on any well-formed input: ratio features whose
denominator is zero come out as 0 so the vector is always complete.  The
vector layout is frozen per schema version and mirrored in
data/feature_schema.json.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .expressivity import dl_family_name, owl_profile
from .hierarchy import (
    Hierarchy, build_class_hierarchy, build_property_hierarchy, cyclic_classes,
    fanout_stats, max_depth, tangledness,
)
from .model import (
    BUILTIN_CLASSES, BUILTIN_DATA_PROPERTIES, BUILTIN_OBJECT_PROPERTIES,
    CLASS_CONSTRUCTORS, LOGICAL_AXIOM_TYPES,
    ClassExpression, DifferentIndividuals, DisjointClasses,
    DisjointUnion, EquivalentClasses, InverseObjectProperties,
    NamedClass, ObjectAllValuesFrom, ObjectExactCardinality, ObjectHasValue,
    ObjectIntersectionOf, ObjectMaxCardinality, ObjectMinCardinality,
    ObjectOneOf, ObjectPropertyDomain, ObjectPropertyRange,
    ObjectSomeValuesFrom, ObjectUnionOf, Ontology, SameIndividual, SubClassOf,
    SubObjectPropertyOf, TransitiveObjectProperty, SymmetricObjectProperty,
    AsymmetricObjectProperty, ReflexiveObjectProperty, IrreflexiveObjectProperty,
    FunctionalObjectProperty, InverseFunctionalObjectProperty,
    axiom_depth, class_expressions_of, constructor_counts,
    individual_occurrences, iter_nodes, named_classes_in, property_name,
    property_occurrences,
)

SCHEMA_VERSION = "1"

PROPERTY_CHARACTERISTICS: tuple[str, ...] = (
    "Transitive", "Symmetric", "Asymmetric", "Reflexive", "Irreflexive",
    "Functional", "InverseFunctional", "Inverse", "Chain",
)

_CARDINALITY_TYPES = (ObjectMinCardinality, ObjectMaxCardinality, ObjectExactCardinality)


def _ratio(num, den) -> float:
    return num / den if den > 0 else 0.0


@dataclass(frozen=True)
class FeatureSpec:
    id: str
    group: str
    kind: str       # "count" | "ratio" | "categorical"
    domain: str
    description: str


def _build_schema() -> tuple[FeatureSpec, ...]:
    entries: list[FeatureSpec] = []

    def add(fid, group, kind, domain, description):
        entries.append(FeatureSpec(fid, group, kind, domain, description))

    add("SC", "size", "count", "nat", "number of named classes")
    add("SOP", "size", "count", "nat", "number of named object properties")
    add("SDP", "size", "count", "nat", "number of named data properties")
    add("SI", "size", "count", "nat", "number of named individuals")
    add("SDT", "size", "count", "nat", "number of datatypes mentioned")
    add("SLA", "size", "count", "nat", "number of logical axioms")
    add("SA", "size", "count", "nat", "total axioms including declarations and annotations")
    add("OPR", "expressivity", "categorical", "DL|EL|QL|RL|PFULL|PNAN", "OWL 2 profile label")
    add("DFN", "expressivity", "categorical", "letter string", "DL family name")
    add("C_MD", "structural", "count", "nat", "max depth of the class hierarchy")
    add("C_MSB", "structural", "count", "nat", "max direct subclasses of a class")
    add("C_ASB", "structural", "ratio", "[0,inf)", "direct subclass links per class")
    add("C_Tangledness", "structural", "count", "nat", "classes with multiple direct superclasses")
    add("C_MTangledness", "structural", "count", "nat", "max direct superclasses of a class")
    add("P_MD", "structural", "count", "nat", "max depth of the object property hierarchy")
    add("P_MSB", "structural", "count", "nat", "max direct subproperties of a property")
    add("P_ASB", "structural", "ratio", "[0,inf)", "direct subproperty links per property")
    add("P_Tangledness", "structural", "count", "nat", "properties with multiple direct superproperties")
    add("P_MTangledness", "structural", "count", "nat", "max direct superproperties of a property")
    add("CCOH", "structural", "ratio", "[0,1]", "class hierarchy cohesion")
    add("PCOH", "structural", "ratio", "[0,1]", "property hierarchy cohesion")
    add("OPCOH", "structural", "ratio", "[0,1]", "object property domain/range cohesion")
    add("OCOH", "structural", "ratio", "[0,1]", "weighted aggregate cohesion")
    add("RRichness", "structural", "ratio", "[0,1]", "non-hierarchical relation share")
    add("AttrRichness", "structural", "ratio", "[0,inf)", "data properties per class")
    add("RTBx", "syntactic", "ratio", "[0,1]", "TBox share of logical axioms")
    add("RRBx", "syntactic", "ratio", "[0,1]", "RBox share of logical axioms")
    add("RABx", "syntactic", "ratio", "[0,1]", "ABox share of logical axioms")
    for t in LOGICAL_AXIOM_TYPES:
        add(f"ATF_{t}", "syntactic", "ratio", "[0,1]", f"frequency of {t} axioms")
    add("AMP", "syntactic", "count", "nat", "max axiom nesting depth")
    add("AAP", "syntactic", "ratio", "[0,inf)", "mean axiom nesting depth")
    for c in CLASS_CONSTRUCTORS:
        add(f"CCF_{c}", "syntactic", "ratio", "[0,1]", f"share of {c} among constructor uses")
    add("OCCD", "syntactic", "ratio", "[0,1]", "constructor density over TBox axioms")
    add("IU", "syntactic", "count", "nat", "intersection/union direct couplings")
    add("EUvI", "syntactic", "count", "nat", "same-role existential+universal couplings")
    add("CUvI", "syntactic", "count", "nat", "same-role cardinality+universal couplings")
    add("PCD", "syntactic", "ratio", "[0,1]", "primitive class definition share of TBox")
    add("NPCD", "syntactic", "ratio", "[0,1]", "non-primitive class definition share of TBox")
    add("GCI", "syntactic", "ratio", "[0,1]", "general inclusion share of TBox")
    add("CCyc", "syntactic", "ratio", "[0,1]", "share of classes on definition cycles")
    add("CDIJ", "syntactic", "ratio", "[0,1]", "share of classes under disjointness")
    add("CNOM", "syntactic", "ratio", "[0,1]", "share of classes defined with nominals")
    for c in PROPERTY_CHARACTERISTICS:
        add(f"OPCF_{c}", "syntactic", "ratio", "[0,1]",
            f"TBox usage share of {c}-declared properties")
    add("HVC_Min", "syntactic", "count", "nat", "largest min-cardinality value")
    add("HVC_Max", "syntactic", "count", "nat", "largest max-cardinality value")
    add("HVC_Exact", "syntactic", "count", "nat", "largest exact-cardinality value")
    add("AVC", "syntactic", "ratio", "[0,inf)", "mean cardinality value")
    add("NomTB", "syntactic", "ratio", "[0,inf)", "nominal occurrences in TBox per individual")
    add("TBNom", "syntactic", "ratio", "[0,1]", "share of TBox axioms containing nominals")
    add("IDISJ", "syntactic", "ratio", "[0,1]", "share of individuals asserted different")
    add("ISAM", "syntactic", "ratio", "[0,1]", "share of individuals asserted same")
    return tuple(entries)


FEATURE_SCHEMA: tuple[FeatureSpec, ...] = _build_schema()
FEATURE_IDS: tuple[str, ...] = tuple(s.id for s in FEATURE_SCHEMA)
FEATURE_GROUPS: tuple[str, ...] = ("size", "expressivity", "structural", "syntactic")


@dataclass
class FeatureVector:
    """Ordered, fixed-arity feature map; treat as immutable once built."""

    schema_version: str
    values: dict[str, int | float | str]

    def __getitem__(self, fid: str):
        return self.values[fid]

    def items(self):
        return self.values.items()


@dataclass(frozen=True)
class PatternCount:
    iu: int
    euvi: int
    cuvi: int


def size_features(o: Ontology) -> dict:
    sig = o.signature
    return {
        "SC": len(sig.classes - BUILTIN_CLASSES),
        "SOP": len(sig.object_properties - BUILTIN_OBJECT_PROPERTIES),
        "SDP": len(sig.data_properties - BUILTIN_DATA_PROPERTIES),
        "SI": len(sig.individuals),
        "SDT": len(sig.datatypes),
        "SLA": o.logical_axiom_count,
        "SA": len(o.axioms),
    }


def hierarchy_features(ch: Hierarchy, ph: Hierarchy) -> dict:
    c_msb, c_asb = fanout_stats(ch)
    p_msb, p_asb = fanout_stats(ph)
    c_tng, c_mtng = tangledness(ch)
    p_tng, p_mtng = tangledness(ph)
    return {
        "C_MD": max_depth(ch), "C_MSB": c_msb, "C_ASB": c_asb,
        "C_Tangledness": c_tng, "C_MTangledness": c_mtng,
        "P_MD": max_depth(ph), "P_MSB": p_msb, "P_ASB": p_asb,
        "P_Tangledness": p_tng, "P_MTangledness": p_mtng,
    }


def _domain_range_counts(o: Ontology) -> tuple[dict[str, set[str]], dict[str, set[str]]]:
    """Named classes directly asserted as domain/range per named property;
    a top-level intersection is flattened into its named operands."""
    domains: dict[str, set[str]] = defaultdict(set)
    ranges: dict[str, set[str]] = defaultdict(set)

    def named_parts(ce: ClassExpression) -> set[str]:
        if isinstance(ce, NamedClass):
            return {ce.iri}
        if isinstance(ce, ObjectIntersectionOf):
            return {op.iri for op in ce.operands if isinstance(op, NamedClass)}
        return set()

    for ax in o.rbox:
        if isinstance(ax, ObjectPropertyDomain) and isinstance(ax.prop, str):
            domains[ax.prop] |= named_parts(ax.domain)
        elif isinstance(ax, ObjectPropertyRange) and isinstance(ax.prop, str):
            ranges[ax.prop] |= named_parts(ax.range)
    return domains, ranges


def cohesion_features(o: Ontology, ch: Hierarchy, ph: Hierarchy,
                      weights: tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3)) -> dict:
    nc = len(ch.nodes)
    np_ = len(ph.nodes)
    ccoh = _ratio(2 * (ch.ndhc + ch.nidhc), nc * nc - nc)
    pcoh = _ratio(2 * (ph.ndhc + ph.nidhc), np_ * np_ - np_)
    domains, ranges = _domain_range_counts(o)
    noprop = len(o.signature.object_properties - BUILTIN_OBJECT_PROPERTIES)
    coupling = sum(len(domains[p]) * len(ranges[p])
                   for p in sorted(set(domains) | set(ranges)))
    opcoh = _ratio(2 * coupling, noprop * (nc * nc - nc))
    # Asserted cycles can push the link count past the tree-shaped bound the
    # formulas assume; cohesion stays within [0,1] by clamping.
    ccoh, pcoh, opcoh = min(ccoh, 1.0), min(pcoh, 1.0), min(opcoh, 1.0)
    wc, wp, wo = weights
    ocoh = min(wc * ccoh + wp * pcoh + wo * opcoh, 1.0)
    return {"CCOH": ccoh, "PCOH": pcoh, "OPCOH": opcoh, "OCOH": ocoh}


def richness_features(o: Ontology, ch: Hierarchy) -> dict:
    sizes = size_features(o)
    return {
        "RRichness": _ratio(sizes["SOP"], sizes["SOP"] + ch.ndhc),
        "AttrRichness": _ratio(sizes["SDP"], sizes["SC"]),
    }


def axiom_level_features(o: Ontology) -> dict:
    sla = o.logical_axiom_count
    out = {
        "RTBx": _ratio(len(o.tbox), sla),
        "RRBx": _ratio(len(o.rbox), sla),
        "RABx": _ratio(len(o.abox), sla),
    }
    type_counts = Counter(ax.axiom_type for ax in o.logical_axioms)
    for t in LOGICAL_AXIOM_TYPES:
        out[f"ATF_{t}"] = _ratio(type_counts[t], sla)
    depths = [axiom_depth(ax) for ax in o.logical_axioms]
    out["AMP"] = max(depths, default=0)
    out["AAP"] = sum(depths) / sla if sla else 0.0
    return out


def constructor_features(o: Ontology) -> dict:
    per_axiom = [constructor_counts(ax) for ax in o.tbox]
    totals: Counter = Counter()
    for counts in per_axiom:
        totals.update(counts)
    grand_total = sum(totals.values())
    out = {f"CCF_{c}": _ratio(totals[c], grand_total) for c in CLASS_CONSTRUCTORS}
    max_per_axiom = max((sum(c.values()) for c in per_axiom), default=0)
    out["OCCD"] = _ratio(grand_total, len(o.tbox) * max_per_axiom)
    return out


def _role_couplings(node: ObjectIntersectionOf) -> tuple[int, int]:
    """(existential+universal, cardinality+universal) same-role couplings
    among the direct operands of one intersection node."""
    exist: Counter = Counter()
    univ: Counter = Counter()
    card: Counter = Counter()
    for op in node.operands:
        if isinstance(op, ObjectSomeValuesFrom):
            exist[op.prop] += 1
        elif isinstance(op, ObjectAllValuesFrom):
            univ[op.prop] += 1
        elif isinstance(op, _CARDINALITY_TYPES):
            card[op.prop] += 1
    euvi = sum(1 for r in exist if univ[r])
    cuvi = sum(1 for r in card if univ[r])
    return euvi, cuvi


def pattern_counts(o: Ontology) -> PatternCount:
    iu = euvi = cuvi = 0
    pair_exist: Counter = Counter()
    pair_univ: Counter = Counter()
    pair_card: Counter = Counter()
    for ax in o.tbox:
        for top in class_expressions_of(ax):
            for node in iter_nodes(top):
                if isinstance(node, ObjectIntersectionOf):
                    if any(isinstance(op, ObjectUnionOf) for op in node.operands):
                        iu += 1
                    e, c = _role_couplings(node)
                    euvi += e
                    cuvi += c
                elif isinstance(node, ObjectUnionOf):
                    if any(isinstance(op, ObjectIntersectionOf) for op in node.operands):
                        iu += 1
        if isinstance(ax, SubClassOf) and isinstance(ax.sub, NamedClass):
            key = ax.sub.iri
            if isinstance(ax.sup, ObjectSomeValuesFrom):
                pair_exist[(key, ax.sup.prop)] += 1
            elif isinstance(ax.sup, ObjectAllValuesFrom):
                pair_univ[(key, ax.sup.prop)] += 1
            elif isinstance(ax.sup, _CARDINALITY_TYPES):
                pair_card[(key, ax.sup.prop)] += 1
    euvi += sum(n * pair_univ[k] for k, n in pair_exist.items())
    cuvi += sum(n * pair_univ[k] for k, n in pair_card.items())
    return PatternCount(iu=iu, euvi=euvi, cuvi=cuvi)


def class_level_features(o: Ontology, cyclic: frozenset[str]) -> dict:
    tbox_size = len(o.tbox)
    sc = len(o.signature.classes - BUILTIN_CLASSES)
    pcd = npcd = gci = 0
    nominal_defined: set[str] = set()
    disjoint_classes: set[str] = set()
    for ax in o.tbox:
        if isinstance(ax, SubClassOf):
            if isinstance(ax.sub, NamedClass):
                pcd += 1
                if _contains_nominal(ax.sup):
                    nominal_defined.add(ax.sub.iri)
            else:
                gci += 1
        elif isinstance(ax, EquivalentClasses):
            named = [op for op in ax.operands if isinstance(op, NamedClass)]
            if named:
                npcd += 1
                for i, op in enumerate(ax.operands):
                    if not isinstance(op, NamedClass):
                        continue
                    if any(_contains_nominal(other)
                           for j, other in enumerate(ax.operands) if j != i):
                        nominal_defined.add(op.iri)
            else:
                gci += 1
        elif isinstance(ax, (DisjointClasses, DisjointUnion)):
            for top in class_expressions_of(ax):
                disjoint_classes |= named_classes_in(top)
    disjoint_classes -= BUILTIN_CLASSES
    nominal_defined -= BUILTIN_CLASSES
    return {
        "PCD": _ratio(pcd, tbox_size),
        "NPCD": _ratio(npcd, tbox_size),
        "GCI": _ratio(gci, tbox_size),
        "CCyc": _ratio(len(cyclic - BUILTIN_CLASSES), sc),
        "CDIJ": _ratio(len(disjoint_classes), sc),
        "CNOM": _ratio(len(nominal_defined), sc),
    }


def _contains_nominal(e: ClassExpression) -> bool:
    return any(isinstance(node, (ObjectOneOf, ObjectHasValue)) for node in iter_nodes(e))


_CHARACTERISTIC_AXIOMS = {
    "Transitive": TransitiveObjectProperty,
    "Symmetric": SymmetricObjectProperty,
    "Asymmetric": AsymmetricObjectProperty,
    "Reflexive": ReflexiveObjectProperty,
    "Irreflexive": IrreflexiveObjectProperty,
    "Functional": FunctionalObjectProperty,
    "InverseFunctional": InverseFunctionalObjectProperty,
}


def property_level_features(o: Ontology) -> dict:
    declared: dict[str, set[str]] = {c: set() for c in PROPERTY_CHARACTERISTICS}
    for ax in o.rbox:
        for name, axiom_type in _CHARACTERISTIC_AXIOMS.items():
            if isinstance(ax, axiom_type):
                declared[name].add(property_name(ax.prop))
        if isinstance(ax, InverseObjectProperties):
            declared["Inverse"].add(property_name(ax.first))
            declared["Inverse"].add(property_name(ax.second))
        elif isinstance(ax, SubObjectPropertyOf) and ax.is_chain:
            declared["Chain"].add(property_name(ax.sup))
    usage: Counter = Counter()
    for ax in o.tbox:
        usage.update(property_occurrences(ax))
    opco = {c: sum(usage[p] for p in declared[c]) for c in PROPERTY_CHARACTERISTICS}
    total = sum(opco.values())
    out = {f"OPCF_{c}": _ratio(opco[c], total) for c in PROPERTY_CHARACTERISTICS}

    mins: list[int] = []
    maxs: list[int] = []
    exacts: list[int] = []
    for ax in o.axioms:
        for top in class_expressions_of(ax):
            for node in iter_nodes(top):
                if isinstance(node, ObjectMinCardinality):
                    mins.append(node.n)
                elif isinstance(node, ObjectMaxCardinality):
                    maxs.append(node.n)
                elif isinstance(node, ObjectExactCardinality):
                    exacts.append(node.n)
    values = mins + maxs + exacts
    out["HVC_Min"] = max(mins, default=0)
    out["HVC_Max"] = max(maxs, default=0)
    out["HVC_Exact"] = max(exacts, default=0)
    out["AVC"] = sum(values) / len(values) if values else 0.0
    return out


def individual_level_features(o: Ontology) -> dict:
    si = len(o.signature.individuals)
    tbox_size = len(o.tbox)
    occurrences = 0
    axioms_with_nominals = 0
    for ax in o.tbox:
        found = 0
        for top in class_expressions_of(ax):
            found += len(individual_occurrences(top))
        occurrences += found
        if found:
            axioms_with_nominals += 1
    different: set[str] = set()
    same: set[str] = set()
    for ax in o.abox:
        if isinstance(ax, DifferentIndividuals):
            different |= {i for i in ax.individuals if isinstance(i, str)}
        elif isinstance(ax, SameIndividual):
            same |= {i for i in ax.individuals if isinstance(i, str)}
    return {
        "NomTB": _ratio(occurrences, si),
        "TBNom": _ratio(axioms_with_nominals, tbox_size),
        "IDISJ": _ratio(len(different), si),
        "ISAM": _ratio(len(same), si),
    }


def extract_all(o: Ontology,
                cohesion_weights: tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3),
                ) -> FeatureVector:
    """Full feature vector in schema order."""
    ch = build_class_hierarchy(o)
    ph = build_property_hierarchy(o)
    patterns = pattern_counts(o)
    computed: dict[str, int | float | str] = {}
    computed.update(size_features(o))
    computed["OPR"] = owl_profile(o).value
    computed["DFN"] = dl_family_name(o).value
    computed.update(hierarchy_features(ch, ph))
    computed.update(cohesion_features(o, ch, ph, cohesion_weights))
    computed.update(richness_features(o, ch))
    computed.update(axiom_level_features(o))
    computed.update(constructor_features(o))
    computed.update({"IU": patterns.iu, "EUvI": patterns.euvi, "CUvI": patterns.cuvi})
    computed.update(class_level_features(o, cyclic_classes(o)))
    computed.update(property_level_features(o))
    computed.update(individual_level_features(o))
    ordered = {fid: computed[fid] for fid in FEATURE_IDS}
    return FeatureVector(schema_version=SCHEMA_VERSION, values=ordered)


def schema_as_dict() -> dict:
    """Machine-readable schema document (mirrors data/feature_schema.json)."""
    return {
        "schema_version": SCHEMA_VERSION,
        "features": [
            {"id": s.id, "group": s.group, "kind": s.kind,
             "domain": s.domain, "description": s.description}
            for s in FEATURE_SCHEMA
        ],
    }
