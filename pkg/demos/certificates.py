"""Export a certificate as JSON, check it independently, and draw it."""

import json
from pathlib import Path

from levelgraph import hamiltonian_level_number, parse_family, generate, verify_certificate
from levelgraph.render import to_svg
from levelgraph.serialize import certificate_from_json, certificate_to_json

g = generate(parse_family("K3,3"))
cert = hamiltonian_level_number(g).certificate
doc = json.dumps(certificate_to_json(cert))
print(doc)

again = certificate_from_json(json.loads(doc), g)
print("round trip verifies:", verify_certificate(g, again))

out = Path("k33_levels.svg")
out.write_text(to_svg(again))
print("wrote", out)
