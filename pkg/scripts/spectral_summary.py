"""Print the E1 and E2 pages, the d1 ranks and the embedding ranks of each component."""

from ncdegen import spectral as sp
from ncdegen.incidence import enumerate_components
from ncdegen.linalg import rank_q


def table(page, title):
    print(title)
    for q in reversed(sp.Q_RANGE):
        print(f"  q={q}  " + "  ".join(f"{page.dim(p, q):4d}" for p in sp.P_RANGE))


if __name__ == "__main__":
    table(sp.build_e1_page(), "E1")
    for p in sp.P_RANGE:
        for q in sp.Q_RANGE:
            d = sp.differential_d1(p, q)
            if d.rows and d.cols:
                print(f"rank d1^({p},{q}) = {rank_q(d)}  ({d.rows}x{d.cols})")
    e2 = sp.compute_e2_page()
    table(e2, "E2")
    print("h^* =", e2.cohomology_dims())
    for s in enumerate_components():
        h = sp.relative_h3(s)
        print(f"{str(s):8s} H^3(S,C) = Z^{h.rank}  torsion {h.torsion}  embedding rank {sp.embed_relative_h3(s).rank}")
    print(sp.euler_characteristics())
