"""Regenerates planarity_cases.json using networkx as an independent oracle."""
import json
import random

import networkx as nx

rng = random.Random(20261018)
cases = []
for _ in range(600):
    n = rng.randint(4, 40)
    # densities straddling the planar threshold
    m = min(n * (n - 1) // 2, rng.randint(n - 1, 5 * n // 2))
    g = nx.gnm_random_graph(n, m, seed=rng.randint(0, 10**9))
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    cases.append({"n": n, "edges": edges, "planar": nx.check_planarity(g)[0]})
# subdivisions of K5 / K3,3 with extra planar padding
for base in (nx.complete_graph(5), nx.complete_bipartite_graph(3, 3)):
    for _ in range(40):
        g = nx.Graph(base)
        nxt = g.number_of_nodes()
        for u, v in list(g.edges()):
            k = rng.randint(0, 3)
            if k:
                g.remove_edge(u, v)
                path = [u] + list(range(nxt, nxt + k)) + [v]
                nxt += k
                nx.add_path(g, path)
        for _ in range(rng.randint(0, 10)):
            a = rng.randrange(nxt)
            g.add_edge(a, nxt)
            nxt += 1
        g = nx.convert_node_labels_to_integers(g)
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
        cases.append({"n": g.number_of_nodes(), "edges": edges, "planar": nx.check_planarity(g)[0]})

# random triangulations with deletions and a few extra edges
for _ in range(240):
    n = rng.randint(5, 45)
    g = nx.Graph([(0, 1), (1, 2), (2, 0)])
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        g.add_edges_from([(v, a), (v, b), (v, c)])
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    edges = list(g.edges())
    for e in rng.sample(edges, rng.randint(0, len(edges) // 2)):
        g.remove_edge(*e)
    for _ in range(rng.choice([0, 0, 1, 2])):
        u, v = rng.sample(range(n), 2)
        g.add_edge(u, v)
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    cases.append({"n": n, "edges": edges, "planar": nx.check_planarity(g)[0]})
with open("planarity_cases.json", "w") as f:
    json.dump(cases, f)
print(sum(c["planar"] for c in cases), "planar of", len(cases))
