import pandas as pd
import plotly.express as px
import plotly.graph_objects as go
from plotly.subplots import make_subplots
from typing import Optional

from .loader import LoadedDiagram
from .topology import summary

# Color definitions
COLORS = {
    "ROOT": "#EEEEEE",
    "PLUS": "#FFCDD2",       # Light Red
    "MINUS": "#BBDEFB",      # Light Blue
    "MIXED": "#E1BEE7",      # Light Purple
}

# Palette cycled over colour ids
PALETTE = ["#C8E6C9", "#FFE0B2", "#D1C4E9", "#B2EBF2", "#F8BBD0", "#DCEDC8", "#FFF9C4", "#CFD8DC"]

# Legend descriptions
LEGEND_INFO = [
    ("COLOR", PALETTE[0], "One region colour of the surface"),
    ("PLUS ARCS", COLORS["PLUS"], "Cycle built from plus-family sides only"),
    ("MINUS ARCS", COLORS["MINUS"], "Cycle built from minus-family sides only"),
    ("MIXED", COLORS["MIXED"], "Cycle crossing both families"),
]


def get_color(color_id: int) -> str:
    return PALETTE[(color_id - 1) % len(PALETTE)]


def get_cycle_color(families: set) -> str:
    """Fill for a cycle by the families its sides come from."""
    if families == {"plus"}:
        return COLORS["PLUS"]
    if families == {"minus"}:
        return COLORS["MINUS"]
    return COLORS["MIXED"]


def visualize_diagram(loaded: LoadedDiagram, output: Optional[str] = None):
    """
    Sunburst of colours and the cycles they cover, with an invariants table and legend.
    """
    deco = loaded.decoration
    print(f"Preparing chart for {loaded.name}: {deco.num_cycles} cycles, {deco.num_colors} colours")

    data = [{
        "id": "root",
        "parent": "",
        "name": f"{loaded.name} ({deco.num_cycles})",
        "value": 0,
        "color": COLORS["ROOT"],
        "is_cycle": False,
        "hover_text": f"Diagram: {loaded.name}",
    }]
    for color in deco.color_set:
        members = deco.cycles_of_color(color)
        data.append({
            "id": f"color{color}",
            "parent": "root",
            "name": f"color {color} ({len(members)})",
            "value": 0,
            "color": get_color(color),
            "is_cycle": False,
            "hover_text": f"Colour {color}<br>Cycles: {len(members)}",
        })
        for k in members:
            cycle = deco.cycles[k]
            families = {side.arc.circle.family.value for side in cycle}
            data.append({
                "id": f"cycle{k + 1}",
                "parent": f"color{color}",
                "name": f"cycle {k + 1}",
                "value": len(cycle),
                "color": get_cycle_color(families),
                "is_cycle": True,
                "hover_text": "<br>".join(str(side) for side in cycle),
            })

    df = pd.DataFrame(data)

    sunburst_fig = px.sunburst(
        df,
        names='name',
        parents='parent',
        ids='id',
        values='value',
        hover_name='name',
        hover_data={'hover_text': True, 'value': False, 'id': False, 'parent': False, 'name': False, 'color': False},
    )
    sunburst_fig.update_traces(marker=dict(colors=df['color']))

    fig = make_subplots(
        rows=2, cols=2,
        column_widths=[0.7, 0.3],
        row_heights=[0.5, 0.5],
        specs=[
            [{"type": "domain", "rowspan": 2}, {"type": "table"}],
            [None, {"type": "table"}]
        ],
        subplot_titles=(loaded.name, "Invariants", "Legend")
    )

    for trace in sunburst_fig.data:
        trace.hovertemplate = "<b>%{label}</b><br>%{customdata[0]}<extra></extra>"
        trace.textinfo = "label+percent entry"
        fig.add_trace(trace, row=1, col=1)

    facts = summary(loaded.diagram, deco)
    fig.add_trace(
        go.Table(
            header=dict(
                values=["Invariant", "Value"],
                font=dict(size=12, color="white"),
                align="left",
                fill_color="#444"
            ),
            cells=dict(
                values=[list(facts.keys()), [str(v) for v in facts.values()]],
                align="left",
                font=dict(size=11),
                fill_color="#F5F5F5"
            )
        ),
        row=1, col=2
    )

    fig.add_trace(
        go.Table(
            header=dict(
                values=["Category", "Meaning"],
                font=dict(size=12, color="white"),
                align="left",
                fill_color="#444"
            ),
            cells=dict(
                values=[[x[0] for x in LEGEND_INFO], [x[2] for x in LEGEND_INFO]],
                align="left",
                font=dict(size=11),
                fill_color=[[x[1] for x in LEGEND_INFO], "#F5F5F5"]
            )
        ),
        row=2, col=2
    )

    fig.update_layout(
        title_text=f"Colours and cycles of {loaded.name}",
        margin=dict(t=60, l=10, r=10, b=10),
    )

    if output:
        fig.write_html(output)
        print(f"Chart written to {output}")
    else:
        print("Opening chart in browser...")
        fig.show()
    return fig
