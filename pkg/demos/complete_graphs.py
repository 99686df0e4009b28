"""Level numbers of small complete graphs, with one certificate spelled out."""

from levelgraph import generate, hamiltonian_level_number, level_number, parse_family

print(" n   l(K_n)   hl(K_n)")
for n in range(3, 8):
    g = generate(parse_family(f"K{n}"))
    print(f"{n:2d}   {level_number(g).value:6}   {hamiltonian_level_number(g).value:7}")

# K_6 on a hamiltonian spine: nine chords, three levels.
res = hamiltonian_level_number(generate(parse_family("K6")))
cert = res.certificate
print("\nspine of K6:", cert.spine.vertices)
for level, frags in enumerate(cert.classes(), 1):
    chords = [cert.fragments[i].attachment_edges[0] for i in frags]
    print(f"  level {level}: {chords}")
