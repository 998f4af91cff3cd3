public static void primesCM(int[] p, int N) {
  final int S=0, A=1, B=2, C=3, H=4;
  int state=S;
  int j=0, k=0, n=0;
  while (true) {
    switch (state) {
      case S: p[0] = 2; p[1] = 3; k = 2; state = A; break;
      case A: if (k >= N) { state = H; } else { j = p[k-1]+2; n = 0; state = B; } break;
      case B: if (p[n]*p[n] > j) { p[k] = j; k = k + 1; state = A; } else { state = C; } break;
      case C: if (j % p[n+1] != 0) { n = n + 1; state = B; } else { j = j + 2; n = 0; state = C; } break;
      case H: return;
  } } }
