# Orbit listings for the named finite orbits, one block per beta value.
# Angle entries are (pi coefficient, theta coefficient); G(a, s) stands for a*pi + s*gamma0.
from fractions import Fraction as F

def P(a): return (F(a),F(0))
def T(a,b): return (F(a),F(b))
Z=P(0)
def parse(w):
    import re
    out=[]
    if w=='[rho]': return out
    for m in re.finditer(r't\((\d),(\d)\)(?:\^(\d+))?', w):
        out += [(int(m.group(1)),int(m.group(2)))]*int(m.group(3) or 1)
    return out
# blocks: (beta tuple, listed gamma indices (1-based), [(gamma tuple, word)])
HANG = dict(n=5, alpha=[P(F(4,3)),T(0,1),T(0,1),T(0,1),T(0,1)], base=([P(1),P(F(4,3))],[P(1),Z]), blocks=[
 ([P(1),P(F(4,3))],[1,2],[
   ((Z,Z),'t(1,2)'),((Z,P(F(2,3))),'t(2,3)t(1,2)'),((Z,P(F(4,3))),'t(1,2)t(1,3)'),
   ((P(1),Z),'[rho]'),((P(1),P(F(2,3))),'t(2,3)'),((P(1),P(F(4,3))),'t(1,3)')]),
 ([P(1),T(-2,2)],[1],[((P(F(1,2)),),'t(1,3)t(3,4)'),((P(F(3,2)),),'t(1,3)t(2,4)')]),
 ([T(-4,3),T(-2,2)],[],[((),'t(2,4)')]),
])
SAND = dict(n=5, alpha=[T(-2,2),T(0,1),T(0,1),T(0,1),T(0,1)], base=([P(1),P(F(4,3))],[P(F(1,2)),Z]), blocks=[
 ([P(1),P(F(4,3))],[1,2],[
   ((P(F(1,2)),Z),'[rho]'),((P(F(1,2)),P(F(2,3))),'t(1,3)^2'),((P(F(1,2)),P(F(4,3))),'t(1,3)'),
   ((P(F(3,2)),Z),'t(1,2)'),((P(F(3,2)),P(F(2,3))),'t(2,3)^2'),((P(F(3,2)),P(F(4,3))),'t(1,2)t(1,3)')]),
 ([T(6,-3),P(F(4,3))],[2],[((P(F(1,3)),),'t(2,3)'),((P(1),),'t(1,3)^2t(2,3)'),((P(F(5,3)),),'t(1,3)t(2,3)')]),
 ([P(1),T(-2,2)],[1],[((Z,),'t(1,3)t(3,4)'),((P(1),),'t(1,2)t(1,3)t(3,4)')]),
 ([T(6,-3),T(-4,3)],[],[((),'t(2,3)t(3,4)')]),
])
s7=[P(F(2*k,7)) for k in range(7)]
s3=[P(F(1,3)),P(1),P(F(5,3))]
BAT_A = ['t(1,3)^3','t(1,2)^2t(2,3)^2','[rho]','t(1,3)^2','t(1,2)t(3,4)t(2,3)^2','t(1,2)^2t(3,4)','t(1,3)',
 't(1,2)t(1,3)^3','t(3,4)t(2,3)','t(1,2)','t(1,2)t(1,3)^2','t(3,4)t(2,3)^2','t(3,4)','t(1,2)t(1,3)',
 't(1,3)t(2,3)','t(3,4)t(2,3)t(1,2)','t(1,2)^2','t(2,3)','t(1,3)^2t(2,3)','t(1,2)t(3,4)','t(1,2)^2t(1,3)']
BAT_B = ['t(2,4)t(1,2)^2t(1,3)','t(2,4)t(1,3)','t(1,3)t(2,4)t(1,2)','t(1,3)^2t(3,4)t(2,3)','t(2,4)t(1,2)t(1,3)','t(2,4)t(3,4)t(1,3)','t(1,3)t(2,4)',
 't(2,4)t(1,2)^2','t(2,4)','t(1,2)t(2,4)^2','t(2,3)^2t(3,4)t(1,3)','t(2,4)t(1,2)','t(2,4)t(3,4)','t(1,2)t(2,4)^2t(3,4)',
 't(1,3)t(2,3)^2t(3,4)','t(2,4)t(1,3)^2','t(1,2)^2t(2,3)t(3,4)','t(2,3)^2t(3,4)','t(2,4)t(1,2)t(1,3)^2','t(2,3)t(3,4)t(2,3)','t(1,3)t(2,4)t(1,3)']
g0='g0'
def G(a,s): return ('g0',F(a),s)  # a*pi + s*g0
gl=[G(F(1,3),-1),G(F(1,3),1),G(1,-1),G(1,1),G(F(5,3),-1),G(F(5,3),1)]
# rows gamma2 (index r), cols gamma1 (index c)
BAT_C = {(0,0):'t(1,3)t(3,4)',(0,2):'t(1,2)t(1,3)t(3,4)',(0,4):'t(2,3)t(2,4)t(1,3)',
 (1,1):'t(1,2)t(2,4)',(1,3):'t(1,2)t(2,4)t(1,2)',(1,5):'t(2,3)t(2,4)t(1,3)',
 (2,0):'t(1,2)^2t(2,4)t(1,3)',(2,2):'t(1,3)^2t(2,3)t(3,4)',(2,4):'t(2,3)t(2,4)',
 (3,1):'t(2,3)t(3,4)',(3,3):'t(1,3)^2t(3,4)',(3,5):'t(2,3)t(2,4)',
 (4,0):'t(1,2)^2t(2,4)',(4,2):'t(1,2)^2t(2,4)t(1,2)',(4,4):'t(2,4)^2t(3,4)',
 (5,1):'t(1,2)t(2,4)t(1,3)',(5,3):'t(1,2)t(2,4)t(1,2)t(1,3)',(5,5):'t(2,3)t(2,4)t(1,3)^2'}
q4=[P(F(1,4)),P(F(3,4)),P(F(5,4)),P(F(7,4))]
t3=[Z,P(F(2,3)),P(F(4,3))]
BAT_D = ['t(1,3)t(3,4)^2','t(2,4)^2t(1,2)^2','t(1,2)t(2,4)t(1,2)t(3,4)','t(3,4)t(2,3)t(1,2)t(3,4)',
 't(1,2)t(1,3)t(3,4)^2','t(2,4)^2','t(2,3)t(2,4)t(1,3)t(3,4)','t(2,4)^2t(1,3)',
 't(1,2)t(2,4)t(3,4)t(1,3)','t(2,4)^2t(1,2)','t(1,2)t(2,4)t(3,4)','t(3,4)t(2,3)t(3,4)']
BAT_E = ['t(1,3)t(2,3)t(2,4)','t(1,2)t(1,3)^3t(2,4)','t(1,3)t(2,3)t(2,4)t(1,2)','t(1,3)^3t(2,4)',
 't(1,2)t(1,3)t(2,4)t(1,2)t(1,3)','t(1,3)t(2,4)t(1,2)t(2,4)','t(1,2)t(1,3)t(2,4)t(1,3)','t(2,3)^2t(2,4)t(1,3)',
 't(1,2)t(1,3)t(2,4)t(1,2)','t(2,3)^2t(2,4)t(1,2)','t(1,2)t(1,3)t(2,4)','t(2,3)^2t(2,4)']
BAT = dict(n=5, alpha=[P(F(12,7))]*5, base=([P(F(2,3)),P(F(8,7))],[P(F(1,3)),P(F(4,7))]), blocks=[
 ([P(F(2,3)),P(F(8,7))],[1,2],[((s3[r],s7[c]),BAT_A[7*r+c]) for r in range(3) for c in range(7)]),
 ([P(F(6,7)),P(F(4,3))],[1,2],[((s7[c],s3[r]),BAT_B[7*r+c]) for r in range(3) for c in range(7)]),
 ([P(F(2,3)),P(F(4,3))],[1,2],[((gl[c],gl[r]),w) for (r,c),w in BAT_C.items()]),
 ([P(F(2,3)),P(1)],[1,2],[((t3[r],q4[c]),BAT_D[4*r+c]) for r in range(3) for c in range(4)]),
 ([P(1),P(F(4,3))],[1,2],[((q4[c],t3[r]),BAT_E[4*r+c]) for r in range(3) for c in range(4)]),
 ([P(F(6,7)),P(F(8,7))],[2],[((s7[c],),w) for c,w in enumerate(['t(1,2)t(3,4)t(2,3)t(1,2)','t(1,2)^2t(2,3)','t(2,3)^2','t(1,3)^2t(2,3)^2','t(1,2)t(3,4)t(2,3)','t(2,3)^2t(1,2)','t(1,3)t(2,3)^2'])]),
 ([P(F(4,7)),P(1)],[2],[((q4[c],),w) for c,w in enumerate(['t(2,3)t(2,4)^2t(1,3)','t(1,2)t(1,3)t(3,4)^2t(2,3)','t(2,3)t(2,4)^2','t(2,3)t(2,4)t(1,3)t(3,4)t(2,3)'])]),
 ([P(1),P(F(10,7))],[1],[((q4[c],),w) for c,w in enumerate(['t(2,3)^2t(2,4)t(1,2)t(3,4)','t(1,2)t(1,3)t(2,4)t(3,4)','t(2,3)^2t(2,4)t(3,4)','t(2,4)^2t(1,3)t(2,4)'])]),
 ([P(F(2,3)),P(F(10,7))],[1],[((t3[c],),w) for c,w in enumerate(['t(2,4)t(1,2)t(2,4)t(1,2)','t(1,2)t(2,4)t(1,2)t(2,4)','t(2,4)t(1,2)t(2,4)'])]),
 ([P(F(4,7)),P(F(4,3))],[2],[((t3[c],),w) for c,w in enumerate(['t(1,2)t(1,3)^2t(2,4)t(1,3)','t(1,2)t(1,3)^2t(2,4)','t(1,3)t(2,4)t(1,2)t(2,3)t(2,4)'])]),
])
JA=[['t(1,2)^2t(1,4)','t(4,5)t(3,4)','t(1,2)^2','t(1,2)^2t(1,3)','t(1,2)t(3,5)','t(1,3)t(3,4)'],
    ['t(1,4)','t(1,3)t(1,4)','[rho]','t(1,3)','t(1,3)t(4,5)','t(4,5)'],
    ['t(1,2)t(1,4)','t(1,2)t(1,3)t(1,4)','t(1,2)','t(1,2)t(1,3)','t(2,4)','t(1,2)t(4,5)']]
g3cols=[(Z,Z),(P(1),Z),(Z,P(F(2,3))),(P(1),P(F(2,3))),(Z,P(F(4,3))),(P(1),P(F(4,3)))]  # (gamma2, gamma3)
h=[P(F(1,2)),P(F(3,2))]
JESTER = dict(n=6, alpha=[T(0,1)]*6, base=([P(F(2,3)),P(1),P(F(4,3))],[P(F(2,3)),Z,P(F(2,3))]), blocks=[
 ([P(F(2,3)),P(1),P(F(4,3))],[1,2,3],[((t3[r],g3cols[c][0],g3cols[c][1]),JA[r][c]) for r in range(3) for c in range(6)]),
 ([T(4,-2),P(1),P(F(4,3))],[2,3],[((h[r],t3[c]),w) for r,row in enumerate([['t(1,3)t(2,4)','t(2,3)','t(1,3)t(1,4)t(2,4)'],['t(1,2)t(4,5)t(2,4)','t(1,3)t(2,3)','t(2,3)t(4,5)']]) for c,w in enumerate(row)]),
 ([P(F(2,3)),P(1),T(-2,2)],[1,2],[((t3[c],h[r]),w) for r,row in enumerate([['t(1,3)t(3,5)','t(4,5)^2','t(1,3)t(2,5)'],['t(1,2)t(3,5)t(4,5)','t(1,3)t(2,3)t(2,5)','t(2,4)t(4,5)']]) for c,w in enumerate(row)]),
 ([P(F(2,3)),T(-4,3),T(-2,2)],[1],[((s3[c],),w) for c,w in enumerate(['t(1,3)t(2,4)t(2,5)','t(2,4)t(4,5)t(3,4)','t(1,3)t(1,4)t(3,5)'])]),
 ([T(4,-2),T(6,-3),P(F(4,3))],[3],[((s3[c],),w) for c,w in enumerate(['t(1,3)t(2,4)t(3,4)','t(2,3)t(3,4)','t(1,3)t(2,3)t(3,5)'])]),
 ([T(4,-2),P(1),T(-2,2)],[2],[((Z,),'t(1,2)t(2,5)'),((P(1),),'t(1,2)t(2,5)t(1,3)')]),
 ([T(4,-2),T(6,-3),T(8,-4)],[],[((),'t(1,2)t(2,5)t(3,5)')]),
 ([T(-6,4),T(-4,3),T(-2,2)],[],[((),'t(1,4)t(2,5)')]),
])
