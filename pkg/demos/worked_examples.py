"""Walk through the two small worked examples by hand and by machine.

Run: python demos/worked_examples.py
"""

from whnfilt import (SupportSeq, analyze, fdh_from_presentation, htilde_t_reference,
                     whn_reference)


def show(name, a, b):
    f = fdh_from_presentation(SupportSeq(a), SupportSeq(b))
    print(f"== {name}: a={a}, b={b}")
    print(f"rank {f.rho}, sigma {f.sigma}, degree {f.degree}")

    # the envelope h~ and its largest maximiser t, around the support
    for n in range(f.lo - 3, f.hi + 2):
        ht, t = htilde_t_reference(f, n)
        print(f"  n={n:3d}  h={f.h(n):3d}  r={f.r(n):2d}  h~={ht:3d}  t={t}")

    w = whn_reference(f)
    print("taus", w.taus, "nus", w.nus, "rhos", w.rhos, "betas", w.betas)

    an = analyze(f)
    for p, summands in zip(an.graded.pieces, an.decomposed):
        print(f"  piece {p.index} on ({p.lower}, {p.upper}]: rank {p.rho}, degree {p.degree}, "
              f"nu {p.nu}, beta {p.beta}")
        for s in summands:
            print(f"    h^{s.j}: degree {s.degree}, deficiency {s.deficiency}, eta {s.eta}, zeta {s.zeta}")
    print("model:", an.model.describe())
    print("restriction to a general line:", an.restriction[1])
    print("certificates pass:", an.certificates_pass)
    print()


# O + Omega(2): one generator too many in degree 0, one relation in degree 1
show("example A", {0: 4}, {1: 1})

# two graded pieces, O then the ideal of a point twisted by -1
show("example B", {0: 1, 2: 2}, {3: 1})

# a plane cubic: pure torsion, no torsion-free pieces at all
show("cubic", {0: 1}, {3: 1})
