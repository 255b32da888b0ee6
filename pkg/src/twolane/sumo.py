"""Plain-network export for the SUMO microsimulator.

Writes the two plain XML files (.nod.xml, .edg.xml): one chain of nodes at
cumulative segment distances and one single-lane edge per segment with the
posted speed in m/s. Callers gate on validation before invoking this; the
writer itself never validates.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path

from .analysis import HighwayFacility
from .units import mi_to_m, mph_to_ms


def build_plain_network(facility: HighwayFacility) -> tuple[ET.Element, ET.Element]:
    nodes = ET.Element("nodes")
    edges = ET.Element("edges")
    position = 0.0
    ET.SubElement(nodes, "node", id="n0", x="0.00", y="0.00")
    for seg in facility.segments:
        length_m = mi_to_m(seg.length_mi)
        position += length_m
        ET.SubElement(
            nodes, "node", id=f"n{seg.index + 1}", x=f"{position:.2f}", y="0.00"
        )
        ET.SubElement(
            edges,
            "edge",
            attrib={
                "id": f"e{seg.index}",
                "from": f"n{seg.index}",
                "to": f"n{seg.index + 1}",
                "numLanes": "1",
                "speed": f"{mph_to_ms(seg.posted_speed_mph):.4f}",
                "length": f"{length_m:.3f}",
            },
        )
    return nodes, edges


def export_plain_network(
    facility: HighwayFacility, out_dir: Path, stem: str
) -> tuple[Path, Path]:
    """Write <stem>.nod.xml and <stem>.edg.xml under out_dir."""
    nodes, edges = build_plain_network(facility)
    out_dir.mkdir(parents=True, exist_ok=True)
    nodes_path = out_dir / f"{stem}.nod.xml"
    edges_path = out_dir / f"{stem}.edg.xml"
    for element, path in ((nodes, nodes_path), (edges, edges_path)):
        tree = ET.ElementTree(element)
        ET.indent(tree)
        tree.write(path, encoding="UTF-8", xml_declaration=True)
    return nodes_path, edges_path
