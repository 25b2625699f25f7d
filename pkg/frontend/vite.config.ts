import { defineConfig } from 'vitest/config';

// The dev server proxies API calls to a locally running `analogon serve`
// (default port 8765); set VITE_API_URL to talk to another instance.
export default defineConfig({
  server: {
    proxy: {
      '/products': 'http://127.0.0.1:8765',
      '/terms': 'http://127.0.0.1:8765',
      '/search': 'http://127.0.0.1:8765',
    },
  },
  test: {
    environment: 'jsdom',
  },
});
