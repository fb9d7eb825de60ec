import networkx as nx, sys, random
def classes_exhaustive(n):
    adj=[set() for _ in range(n)]
    for v in (1,2,3): adj[0].add(v); adj[v].add(0)
    cls=[]
    def rec():
        u=next((x for x in range(n) if len(adj[x])<3),None)
        if u is None:
            G=nx.Graph([(a,b) for a in range(n) for b in adj[a] if a<b])
            h=nx.weisfeiler_lehman_graph_hash(G,iterations=4)
            if not any(hh==h and nx.is_isomorphic(G,H) for hh,H in cls): cls.append((h,G))
            return
        for v in range(u+1,n):
            if len(adj[v])<3 and v not in adj[u]:
                adj[u].add(v); adj[v].add(u); rec(); adj[u].discard(v); adj[v].discard(u)
    rec(); return [G for _,G in cls]
def classes_sampled(n, expected, seed=1):
    rng=random.Random(seed); cls=[]
    while len(cls)<expected:
        G=nx.random_regular_graph(3,n,seed=rng.randrange(1<<30))
        h=nx.weisfeiler_lehman_graph_hash(G,iterations=4)
        if not any(hh==h and nx.is_isomorphic(G,H) for hh,H in cls): cls.append((h,G))
    return [G for _,G in cls]
out=sys.argv[1]
for n in (4,6,8,10):
    cs=classes_exhaustive(n) if n<=8 else classes_sampled(n,21)
    def key(G): return nx.to_graph6_bytes(nx.convert_node_labels_to_integers(G,ordering='sorted'),header=False).strip()
    lines=sorted(key(G) for G in cs)
    with open(f"{out}/cubic_{n:02d}.g6","wb") as f:
        for l in lines: f.write(l+b"\n")
    print(n,len(lines),file=sys.stderr)
