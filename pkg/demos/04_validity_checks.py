# Complete positivity and trace preservation.
import numpy as np

from qchannels import depolarizing, is_completely_positive, is_cptp, kraus_channel, transpose_channel

cp, lam = is_completely_positive(transpose_channel(2))
print(f"transpose: CP={cp}, smallest Choi eigenvalue {lam:.3f}")

for p in np.linspace(0, 1, 6):
    v = is_cptp(depolarizing(2, p))
    print(f"depolarizing p={p:.1f}: CPTP={v.cptp}, min eig {v.min_choi_eigenvalue:.3f}")

amp = kraus_channel([np.diag([1, np.sqrt(0.6)]), np.array([[0, np.sqrt(0.4)], [0, 0]])])
print("amplitude damping:", is_cptp(amp))

print("2*I Kraus operator:", is_cptp(kraus_channel([2 * np.eye(2)])))
