"""
快速运行验收：默认语料上的验证套件 + 万顶点双星的快速路径对比
"""
import subprocess
import sys
from pathlib import Path

project_root = Path(__file__).parent

print("=" * 70)
print("GraphVuln 验收运行")
print("=" * 70)
print(f"工作目录: {project_root}")
print(f"Python版本: {sys.version}")
print()

steps = [
    ("验证套件（exhaustive n≤6, trees n≤8, seed 42）",
     ["verify", "--max-n", "6", "--trees-max-n", "8", "--seed", "42", "--out", "verification_report.json"]),
    ("快速路径（T(n,2) 双星）",
     ["bench", "--family", "bistar", "--sizes", "100,1000,10000", "--out", "bench_bistar.json"]),
]

failed = False
for title, args in steps:
    cmd = [sys.executable, "-m", "cli", *args]
    print(f"[{title}] 执行命令: {' '.join(cmd)}")
    try:
        result = subprocess.run(cmd, cwd=project_root)
    except KeyboardInterrupt:
        print("\n已中断")
        sys.exit(130)
    print(f"  退出码: {result.returncode}")
    failed = failed or result.returncode != 0

print("=" * 70)
print("验收失败" if failed else "验收通过")
sys.exit(1 if failed else 0)
