"""PNG rendering through matplotlib, mirroring the SVG layout."""

from __future__ import annotations

from .grid import EpgRepresentation, vertex_color, vertex_offset


def render_png(rep: EpgRepresentation, path: str, dpi: int = 120) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    mx, my = rep.extent
    fig, ax = plt.subplots(figsize=(max(2.0, 0.5 * (mx + 2)), max(2.0, 0.5 * (my + 2))))
    for x in range(mx + 1):
        ax.axvline(x, color="#dddddd", lw=0.6, zorder=0)
    for y in range(my + 1):
        ax.axhline(y, color="#dddddd", lw=0.6, zorder=0)
    for v in sorted(rep.paths):
        off = vertex_offset(v)
        xs = [x + off for x, _ in rep.paths[v].corners]
        ys = [y + off for _, y in rep.paths[v].corners]
        ax.plot(xs, ys, color=vertex_color(v), lw=2, solid_capstyle="round")
        ax.annotate(str(v), (xs[0], ys[0]), fontsize=7, color=vertex_color(v), xytext=(-6, 3), textcoords="offset points")
    ax.set_xlim(-0.5, mx + 0.5)
    ax.set_ylim(-0.5, my + 0.5)
    ax.set_aspect("equal")
    ax.set_xticks(range(mx + 1))
    ax.set_yticks(range(my + 1))
    ax.tick_params(labelsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
